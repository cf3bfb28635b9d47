#include "maps_internal.hpp"

namespace psp::detail {

const MapDef& psi_def() {
    static const MapDef def{
        {
            {"append 1", [](const View& v) { return v.even.empty(); },
             [](const View& v, CaseTrace&) { return with_copies(v.p, 1, 1); }},
            {"raise largest even", [](const View& v) { return !v.even.empty(); },
             [](const View& v, CaseTrace&) {
                 const Part e = v.even.front();
                 return with_copies(without_copies(v.p, e, 1), e + 1, 1);
             }},
        },
        {
            {"onto", [](const View&) { return true; },
             [](const View& v) {
                 if (v.has(1)) return without_copies(v.p, 1, 1);
                 const Part o = v.odd.back();
                 return with_copies(without_copies(v.p, o, 1), o - 1, 1);
             }},
        },
    };
    return def;
}

const MapDef& f_def() {
    static const MapDef def{
        {
            {"raise first part", [](const View&) { return true; },
             [](const View& v, CaseTrace&) {
                 std::vector<Part> x = v.p.part_vector();
                 x.front() += 2;
                 return from(std::move(x));
             }},
        },
        {
            {"first part gap", [](const View& v) { return v.at(1) >= 3 && v.at(1) - v.at(2) >= 2; },
             [](const View& v) {
                 std::vector<Part> x = v.p.part_vector();
                 x.front() -= 2;
                 return from(std::move(x));
             }},
        },
    };
    return def;
}

const MapDef& append1_def() {
    static const MapDef def{
        {
            {"append 1", [](const View&) { return true; },
             [](const View& v, CaseTrace&) { return with_copies(v.p, 1, 1); }},
        },
        {
            {"contains 1", [](const View& v) { return v.has(1); },
             [](const View& v) { return without_copies(v.p, 1, 1); }},
        },
    };
    return def;
}

}  // namespace psp::detail
