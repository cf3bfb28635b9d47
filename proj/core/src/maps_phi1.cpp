#include "maps_internal.hpp"

namespace psp::detail {

namespace {

bool one_parity(const View& v) { return v.odd.empty() || v.even.empty(); }
bool both_parities(const View& v) { return !one_parity(v); }

Partition identity(const View& v, CaseTrace&) { return v.p; }
Partition shift(const View& v, CaseTrace&) { return parity_shift(v, +1); }

Partition inv_identity(const View& v) { return v.p; }
Partition inv_shift(const View& v) { return parity_shift(v, -1); }

std::vector<CaseDef> cases() {
    return {
        {"identity", one_parity, identity},
        {"shift", both_parities, shift},
    };
}

}  // namespace

const MapDef& phi1_dd_def() {
    static const MapDef def{
        cases(),
        {
            {"tilde(i)", one_parity, inv_identity},
            {"tilde(ii)",
             [](const View& v) { return both_parities(v) && v.even.back() - v.odd.front() >= 3; },
             inv_shift},
        },
    };
    return def;
}

const MapDef& phi1_uu_def() {
    static const MapDef def{
        cases(),
        {
            {"tilde(i)", [](const View& v) { return v.odd.empty(); }, inv_identity},
            {"tilde(ii)", [](const View& v) { return v.even.empty(); }, inv_identity},
            {"tilde(iii)",
             [](const View& v) {
                 const std::size_t lo = v.ell_o();
                 return both_parities(v) && lo <= v.ell_e() && v.at(lo) - v.at(lo + 1) >= 2;
             },
             inv_shift},
            {"tilde(iv)",
             [](const View& v) {
                 const std::size_t j = v.ell() - v.ell_e();
                 return both_parities(v) && v.ell_e() < v.ell_o() && v.at(j) - v.at(j + 1) >= 2;
             },
             inv_shift},
        },
    };
    return def;
}

}  // namespace psp::detail
