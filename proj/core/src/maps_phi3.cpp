#include "maps_internal.hpp"

namespace psp::detail {

namespace {

// Case 1 and Case 2 both describe the empty partition; Case 2 is restricted to
// nonempty even blocks so that exactly one case fires.
bool case2(const View& v) { return v.odd.empty() && !v.even.empty() && v.distinct(); }

}  // namespace

const MapDef& phi3_def() {
    static const MapDef def{
        {
            {"Case 1", [](const View& v) { return v.even.empty(); },
             [](const View& v, CaseTrace&) { return v.p; }},
            {"Case 2", case2, [](const View& v, CaseTrace&) { return v.p; }},
            {"Case 3", [](const View& v) { return !v.even.empty() && !case2(v); },
             [](const View& v, CaseTrace&) {
                 std::vector<Part> x;
                 for (Part p : v.p.parts()) {
                     if (p > 1) x.push_back(p - 1);
                 }
                 x.insert(x.end(), v.ell(), 1);
                 return from(std::move(x));
             }},
        },
        {
            {"tilde(i)", [](const View& v) { return v.even.empty() && v.distinct(); },
             [](const View& v) { return v.p; }},
            {"tilde(ii)", [](const View& v) { return v.odd.empty() && v.distinct(); },
             [](const View& v) { return v.p; }},
            {"tilde(iii)",
             [](const View& v) {
                 const std::size_t m1 = v.mult(1);
                 const std::size_t above = v.gt(1);
                 if (v.odd.empty() || v.ell() < 4 || v.ell() % 2 != 0) return false;
                 if (m1 < 2 || m1 < above) return false;
                 const bool only_one_repeats = v.repeated.size() == 1 && v.repeated[0] == 1;
                 if (v.even.empty() && only_one_repeats) {
                     return m1 == v.ell() || m1 >= above + 4;
                 }
                 return true;
             },
             [](const View& v) {
                 const std::size_t half = v.ell() / 2;
                 std::vector<Part> x = v.p.part_vector();
                 for (std::size_t i = 0; i < half; ++i) x[i] += 1;
                 return without_copies(from(std::move(x)), 1, half);
             }},
        },
    };
    return def;
}

}  // namespace psp::detail
