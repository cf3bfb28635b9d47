#include "maps_internal.hpp"

namespace psp::detail {

const MapDef& phi5_def() {
    static const MapDef def{
        {
            {"Case 1", [](const View& v) { return v.even.empty(); },
             [](const View& v, CaseTrace&) {
                 std::vector<Part> x = v.p.part_vector();
                 x.front() += 1;
                 return from(std::move(x));
             }},
            {"Case 2", [](const View& v) { return !v.even.empty() && v.odd.empty(); },
             [](const View& v, CaseTrace&) { return with_copies(v.p, 1, 1); }},
            {"Case 3", [](const View& v) { return !v.even.empty() && !v.odd.empty(); },
             [](const View& v, CaseTrace&) {
                 std::vector<Part> x{v.at(1) + v.at(2)};
                 for (std::size_t i = 3; i <= v.ell(); ++i) x.push_back(v.at(i) - 1);
                 x.insert(x.end(), v.ell() - 1, 1);
                 return from(std::move(x));
             }},
        },
        {
            {"E1", [](const View& v) { return v.ell_e() == 1 && v.at(1) - v.at(2) == 1; },
             [](const View& v) {
                 std::vector<Part> x = v.p.part_vector();
                 x.front() -= 1;
                 return from(std::move(x));
             }},
            {"E2", [](const View& v) { return v.ell_o() == 1 && v.odd[0] == 1; },
             [](const View& v) { return without_copies(v.p, 1, 1); }},
            {"E3",
             [](const View& v) {
                 const Part m1 = v.at(1);
                 const Part m2 = v.at(2);
                 return m1 % 4 == 2 && v.ell_o() >= 3 && m1 - m2 >= m2 + 2 && m2 + 2 >= 3 &&
                        v.mult(1) >= v.gt(1);
             },
             [](const View& v) {
                 const std::size_t half = v.ell() / 2;
                 std::vector<Part> x{v.at(1) / 2, v.at(1) / 2};
                 for (std::size_t i = 2; i <= half; ++i) x.push_back(v.at(i) + 1);
                 return from(std::move(x));
             }},
        },
    };
    return def;
}

}  // namespace psp::detail
