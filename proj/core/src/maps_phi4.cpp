#include <stdexcept>

#include "maps_internal.hpp"

namespace psp::detail {

namespace {

bool both(const View& v) { return !v.odd.empty() && !v.even.empty(); }
bool gap_one(const View& v) { return v.even.back() - v.odd.front() == 1; }

bool case3(const View& v) {
    return both(v) && v.has(1) && v.ell_o() >= 2 && !(v.ell_o() == 2 && gap_one(v));
}
bool case4(const View& v) { return both(v) && v.has(1) && v.ell_o() == 2 && gap_one(v); }
bool case5(const View& v) { return both(v) && v.ell_o() == 1 && v.odd[0] == 1; }

Partition case1(const View& v, CaseTrace&) { return v.p; }
Partition case2(const View& v, CaseTrace&) { return parity_shift(v, +1); }

Partition run_case3(const View& v, CaseTrace& t) {
    const auto& parts = v.p.part_vector();
    const Partition eta = from(std::vector<Part>(parts.begin() + 1, parts.end() - 2));
    const MapResult inner = dispatch(MapId::phi4, phi4_def(), eta);
    if (inner.trace.case_label != "Case 1" && inner.trace.case_label != "Case 2") {
        throw std::logic_error("phi4: eta = " + to_string(eta) + " falls under " + inner.trace.case_label);
    }
    const int k = (v.at(v.ell() - 1) - 1) / 2;
    const int big = 2 * k + 2;
    const int q = v.at(1) / big;
    const int r = v.at(1) % big;
    t.k = k;
    t.q = q;
    t.r = r;
    t.eta = eta;
    PartitionBuilder b(inner.image);
    b.add(big, static_cast<std::size_t>(q + 1));
    if (r > 0) b.add(r);
    return b.build();
}

Partition run_case4(const View& v, CaseTrace& t) {
    const int k = (v.odd[0] - 1) / 2;
    t.k = k;
    if (v.ell() == 3) return Partition{2 * k + 2, 2 * k + 2};
    std::vector<Part> x(v.even.begin() + 1, v.even.end());
    x.push_back(2 * k + 2);
    x.insert(x.end(), static_cast<std::size_t>(v.at(1) / 2), 2);
    return from(std::move(x));
}

std::vector<CaseDef> cases() {
    return {
        {"Case 1", [](const View& v) { return v.odd.empty() || v.even.empty(); }, case1},
        {"Case 2", [](const View& v) { return both(v) && !v.has(1); }, case2},
        {"Case 3", case3, run_case3},
        {"Case 4", case4, run_case4},
        {"Case 5(i)", [](const View& v) { return case5(v) && v.ell() == 2; },
         [](const View& v, CaseTrace&) { return Partition{static_cast<Part>(v.n()) - 4, 2, 2}; }},
        {"Case 5(ii)", [](const View& v) { return case5(v) && v.ell() == 3; },
         [](const View& v, CaseTrace&) {
             return with_copies(Partition{v.at(2) + 1}, 2, static_cast<std::size_t>(v.at(1) / 2));
         }},
        {"Case 5(iii)", [](const View& v) { return case5(v) && v.ell() == 4 && v.has(2); },
         [](const View& v, CaseTrace&) {
             return with_copies(Partition{v.at(1) + 1}, 2, static_cast<std::size_t>(v.at(2) / 2 + 1));
         }},
        {"Case 5(iv)", [](const View& v) { return case5(v) && v.ell() >= 4 && !v.has(2); },
         [](const View& v, CaseTrace&) {
             std::vector<Part> x{v.at(1) + 1};
             for (std::size_t i = 2; i + 2 <= v.ell(); ++i) x.push_back(v.at(i));
             x.insert(x.end(), static_cast<std::size_t>(v.at(v.ell() - 1) / 2), 2);
             return from(std::move(x));
         }},
        {"Case 5(v)", [](const View& v) { return case5(v) && v.ell() >= 5 && v.has(2); },
         [](const View& v, CaseTrace&) {
             std::vector<Part> x{v.at(2) + 1};
             for (std::size_t i = 3; i + 2 <= v.ell(); ++i) x.push_back(v.at(i));
             x.insert(x.end(), static_cast<std::size_t>(v.at(1) / 2 + 1), 2);
             return from(std::move(x));
         }},
    };
}

// Image components.

bool c1(const View& v) { return (v.odd.empty() || v.even.empty()) && v.distinct(); }
bool c2(const View& v) { return v.distinct() && both(v) && v.odd.back() - v.even.front() >= 3; }

// Parts strictly larger than the single repeated part.
Partition above(const View& v, Part r) {
    std::vector<Part> x;
    for (Part p : v.p.parts()) {
        if (p > r) x.push_back(p);
    }
    return from(std::move(x));
}

bool c3(const View& v) {
    if (v.ell() < 3 || v.repeated.size() != 1) return false;
    const Part r = v.repeated[0];
    if (r % 2 != 0 || r < 4) return false;
    // r must be the smallest or second smallest part size.
    const Part smallest = v.freq.back().value;
    const bool low_enough =
        r == smallest || (v.freq.size() >= 2 && r == v.freq[v.freq.size() - 2].value);
    if (!low_enough) return false;
    const Partition mt = above(v, r);
    const View tv(mt);
    if (!c1(tv) && !c2(tv)) return false;
    return mt.empty() || v.n() - mt.weight() - r > v.at(1);
}

bool c4(const View& v) {
    if (!v.odd.empty() || v.distinct()) return false;
    if (v.ell() <= 2) return true;
    if (!v.has(2) || v.freq.size() < 2) return false;
    const auto& smallest = v.freq.back();
    const auto& second = v.freq[v.freq.size() - 2];
    if (smallest.multiplicity < 2 || second.multiplicity < 2) return false;
    std::size_t others = 0;
    for (Part r : v.repeated) {
        if (r == 2) continue;
        ++others;
        if (v.mult(r) != 2) return false;
    }
    return others == 1 && 2 * v.mult(2) > static_cast<std::size_t>(v.at(1));
}

bool only_two_repeats(const View& v) { return v.repeated.size() == 1 && v.repeated[0] == 2; }

std::size_t evens_above_two(const View& v) {
    std::size_t c = 0;
    for (Part e : v.even) c += e > 2 ? 1 : 0;
    return c;
}

bool odd_then_twos(const View& v) {
    return v.ell_o() == 1 && v.ell() == v.mult(2) + 1 && v.at(1) % 2 == 1;
}

std::size_t twice_m2(const View& v) { return 2 * v.mult(2); }

bool c5_i(const View& v) { return v.ell() == 3 && v.ell_o() == 1 && v.mult(2) == 2; }
bool c5_ii(const View& v) {
    return odd_then_twos(v) && v.mult(2) >= 3 && twice_m2(v) > static_cast<std::size_t>(v.at(1));
}
bool c5_iii(const View& v) {
    return odd_then_twos(v) && v.mult(2) >= 3 && twice_m2(v) < static_cast<std::size_t>(v.at(1));
}
bool c5_iv(const View& v) {
    if (v.ell_o() != 1 || evens_above_two(v) < 1 || !only_two_repeats(v)) return false;
    const auto a = next_larger(v.p, 2);
    return a && twice_m2(v) < static_cast<std::size_t>(*a);
}
bool c5_v(const View& v) {
    return v.ell_o() == 1 && evens_above_two(v) >= 2 && only_two_repeats(v) &&
           twice_m2(v) > static_cast<std::size_t>(v.at(1)) + 2;
}

Partition inv_c1(const View& v) { return v.p; }
Partition inv_c2(const View& v) { return parity_shift(v, -1); }

Partition inv_c3(const View& v) {
    const Part r = v.repeated[0];
    const int k = (r - 2) / 2;
    const Partition mt = above(v, r);
    const View tv(mt);
    const Partition base = c1(tv) ? inv_c1(tv) : inv_c2(tv);
    const Part first = static_cast<Part>(v.n() - mt.weight() - r);
    return PartitionBuilder(base).add(first).add(2 * k + 1).add(1).build();
}

Partition inv_c4(const View& v) {
    if (v.ell() == 2) return Partition{v.at(1), v.at(2) - 1, 1};
    Part r = 0;
    for (Part x : v.repeated) {
        if (x != 2) r = x;
    }
    const int k = (r - 2) / 2;
    const std::size_t m2 = v.mult(2);
    const Partition rest = without_copies(without_copies(v.p, r, 1), 2, m2);
    return PartitionBuilder(rest)
        .add(static_cast<Part>(2 * m2))
        .add(2 * k + 1)
        .add(1)
        .build();
}

Partition inv_c5_i(const View& v) { return Partition{v.at(1) + 3, 1}; }
Partition inv_c5_ii(const View& v) {
    return Partition{static_cast<Part>(twice_m2(v)), v.at(1) - 1, 1};
}
Partition inv_c5_iii(const View& v) {
    return Partition{v.at(1) - 1, static_cast<Part>(twice_m2(v)) - 2, 2, 1};
}
Partition inv_c5_iv(const View& v) {
    const Partition rest = without_copies(without_copies(v.p, v.at(1), 1), 2, v.mult(2));
    return PartitionBuilder(rest).add(v.at(1) - 1).add(static_cast<Part>(twice_m2(v))).add(1).build();
}
Partition inv_c5_v(const View& v) {
    const Partition rest = without_copies(without_copies(v.p, v.at(1), 1), 2, v.mult(2) - 1);
    return PartitionBuilder(rest).add(static_cast<Part>(twice_m2(v)) - 2).add(v.at(1) - 1).add(1).build();
}

}  // namespace

const MapDef& phi4_def() {
    static const MapDef def{
        cases(),
        {
            {"C1", c1, inv_c1},
            {"C2", c2, inv_c2},
            {"C3", c3, inv_c3},
            {"C4", c4, inv_c4},
            {"C5(i)", c5_i, inv_c5_i},
            {"C5(ii)", c5_ii, inv_c5_ii},
            {"C5(iii)", c5_iii, inv_c5_iii},
            {"C5(iv)", c5_iv, inv_c5_iv},
            {"C5(v)", c5_v, inv_c5_v},
        },
    };
    return def;
}

}  // namespace psp::detail

namespace psp {

bool phi4_c5_aggregate(const Partition& mu) {
    const detail::View v(mu);
    if (v.ell_o() != 1 || !detail::only_two_repeats(v)) return false;
    const std::size_t big = detail::evens_above_two(v);
    const std::size_t m2 = detail::twice_m2(v);
    const auto a = next_larger(mu, 2);
    const bool below_next = a && m2 < static_cast<std::size_t>(*a);
    if (big == 1) return below_next;
    if (big >= 2) return below_next || m2 > static_cast<std::size_t>(v.at(1)) + 2;
    return true;
}

}  // namespace psp
