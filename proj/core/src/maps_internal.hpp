#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "psp/maps.hpp"

namespace psp::detail {

// Parity-split view used by every case and image predicate.
struct View {
    explicit View(const Partition& p);

    const Partition& p;
    std::vector<Part> odd;   // non-increasing
    std::vector<Part> even;  // non-increasing
    std::vector<Frequency> freq;
    std::vector<Part> repeated;  // values with multiplicity > 1, ascending

    std::size_t ell() const { return p.length(); }
    std::size_t ell_o() const { return odd.size(); }
    std::size_t ell_e() const { return even.size(); }
    Weight n() const { return p.weight(); }
    Part at(std::size_t j) const { return p.part(j); }
    std::size_t mult(Part v) const;
    std::size_t gt(Part v) const { return count_greater(p, v); }
    std::size_t ge(Part v) const { return count_at_least(p, v); }
    bool distinct() const { return repeated.empty(); }
    bool has(Part v) const { return mult(v) > 0; }
};

struct CaseDef {
    std::string_view label;
    bool (*applies)(const View&);
    Partition (*run)(const View&, CaseTrace&);
};

struct ComponentDef {
    std::string_view id;
    bool (*holds)(const View&);
    Partition (*inverse)(const View&);
};

struct MapDef {
    std::vector<CaseDef> cases;
    std::vector<ComponentDef> components;
};

const MapDef& phi1_dd_def();
const MapDef& phi1_uu_def();
const MapDef& phi2_def();
const MapDef& phi3_def();
const MapDef& phi4_def();
const MapDef& phi5_def();
const MapDef& psi_def();
const MapDef& f_def();
const MapDef& append1_def();

// Adds one to the first min(ell_o, ell_e) parts and subtracts one from the last
// as many (sign = +1), or the reverse (sign = -1).
Partition parity_shift(const View& v, int sign);

// Runs the single matching case of def on p; throws std::logic_error if zero or
// several case predicates hold.
MapResult dispatch(MapId m, const MapDef& def, const Partition& p);

Partition from(std::vector<Part> parts);

}  // namespace psp::detail
