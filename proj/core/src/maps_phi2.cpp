#include "maps_internal.hpp"

namespace psp::detail {

namespace {

bool case4_shape(const View& v) {
    return v.ell_e() >= 2 && v.ell_o() == 2 && v.odd[0] == v.even.back() - 1 && v.odd[1] == 1;
}

std::vector<CaseDef> cases() {
    return {
        {"Case 1", [](const View& v) { return v.even.empty(); },
         [](const View& v, CaseTrace&) { return v.p; }},
        {"Case 2", [](const View& v) { return v.odd.empty() && v.ell_e() == 1; },
         [](const View& v, CaseTrace&) { return v.p; }},
        {"Case 3", [](const View& v) { return v.ell_o() >= 2 && v.ell_e() == 1; },
         [](const View& v, CaseTrace&) {
             std::vector<Part> x{v.even[0] - 1};
             x.insert(x.end(), v.odd.begin(), v.odd.end());
             x.back() += 1;
             return from(std::move(x));
         }},
        {"Case 4", case4_shape,
         [](const View& v, CaseTrace&) {
             std::vector<Part> x{v.even[0] + 1};
             for (std::size_t i = 1; i < v.ell_e(); ++i) x.push_back(v.even[i] - 1);
             x.push_back(v.odd[0]);
             x.insert(x.end(), v.ell_e() - 1, 1);
             return from(std::move(x));
         }},
        {"Case 5",
         [](const View& v) {
             return (v.ell_e() == 1 && v.ell_o() == 1) || (v.ell_e() >= 2 && !case4_shape(v));
         },
         [](const View& v, CaseTrace& t) {
             const int k = v.odd.empty() ? 1 : std::min(v.odd[0], v.even.back() - v.odd[0]);
             t.k = k;
             std::vector<Part> x;
             for (Part e : v.even) x.push_back(e - k);
             x.insert(x.end(), v.odd.begin(), v.odd.end());
             x.insert(x.end(), v.ell_e(), k);
             return from(std::move(x));
         }},
    };
}

bool all_odd_repeated(const View& v) { return v.even.empty() && !v.distinct(); }

bool b5_restrictions(const View& v) {
    const Part r = v.repeated[0];
    const std::optional<Part> rr =
        v.repeated.size() > 1 ? std::optional<Part>(v.repeated[1]) : std::nullopt;
    const std::size_t m = v.mult(r);
    const std::size_t g = v.gt(r);
    const auto rr_window = [&] { return rr && (m + 1 == v.ge(*rr) || m == v.ge(*rr)); };
    if (r == 1) {
        // (I); with m(1) >= l_{>1} there are no further conditions.
        return m < g ? rr_window() : true;
    }
    // (II)
    if (v.ell() < 5) return false;
    if (m < g) return rr_window();
    if (m == g) {
        const auto a = next_larger(v.p, r);
        return a && v.mult(*a) > 1;
    }
    return v.ge(r) % 2 == 1;
}

Partition b5_inverse(const View& v) {
    if (v.ell() == 3) return from({v.at(1) + v.at(3), v.at(2)});
    const Part r = v.repeated[0];
    const std::size_t m = v.mult(r);
    const std::size_t g = v.gt(r);
    std::size_t x_count = 0;
    if (m < g || (m == g && r != 1)) {
        if (v.repeated.size() < 2) throw PartitionError("second smallest repeated part is absent");
        x_count = v.ge(v.repeated[1]) - 1;
    } else {
        x_count = v.ge(r) / 2;
    }
    std::vector<Part> x = v.p.part_vector();
    for (std::size_t i = 0; i < x_count && i < x.size(); ++i) x[i] += r;
    return without_copies(from(std::move(x)), r, x_count);
}

}  // namespace

const MapDef& phi2_def() {
    static const MapDef def{
        cases(),
        {
            {"B1", [](const View& v) { return v.even.empty() && v.distinct(); },
             [](const View& v) { return v.p; }},
            {"B2", [](const View& v) { return v.ell() == 1 && v.n() % 2 == 0; },
             [](const View& v) { return v.p; }},
            {"B3",
             [](const View& v) {
                 if (v.ell_e() != 1 || v.ell_o() < 2) return false;
                 const auto& o = v.odd;
                 if (o[0] < o[1]) return false;
                 for (std::size_t i = 1; i + 1 < o.size(); ++i) {
                     if (o[i] <= o[i + 1]) return false;
                 }
                 return o.back() > v.even[0];
             },
             [](const View& v) {
                 std::vector<Part> x = v.p.part_vector();
                 x.front() += 1;
                 x.back() -= 1;
                 return from(std::move(x));
             }},
            {"B4",
             [](const View& v) {
                 if (!all_odd_repeated(v) || v.ell() < 4 || v.ell() % 2 != 0) return false;
                 if (v.at(1) == v.at(2)) return false;
                 if (v.mult(1) + 2 != v.gt(1)) return false;
                 const auto a = next_larger(v.p, 1);
                 return a && v.mult(*a) > 1;
             },
             [](const View& v) {
                 const std::size_t m = v.mult(1);
                 std::vector<Part> x{v.at(1) - 1};
                 for (std::size_t i = 2; i <= m + 1; ++i) x.push_back(v.at(i) + 1);
                 x.push_back(v.at(m + 2));
                 x.push_back(1);
                 return from(std::move(x));
             }},
            {"B5",
             [](const View& v) {
                 if (!all_odd_repeated(v) || v.ell() < 3) return false;
                 return v.ell() == 3 || b5_restrictions(v);
             },
             b5_inverse},
        },
    };
    return def;
}

}  // namespace psp::detail
