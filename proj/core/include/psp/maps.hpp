#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psp/classes.hpp"
#include "psp/partition.hpp"

namespace psp {

enum class MapId : std::uint8_t {
    phi1_dd,
    phi1_uu,
    phi2,
    phi3,
    phi4,
    phi5,
    psi,
    f_shift,
    bcn_append1,
};

std::vector<MapId> all_maps();
/// Library name, e.g. "phi1_dd".
std::string_view map_name(MapId m);
/// CLI token, e.g. "phi1dd", "f", "append1".
std::string_view map_token(MapId m);
/// Accepts either the CLI token or the library name.
MapId parse_map_id(std::string_view text);

/// Which case of a map fired, plus the auxiliary quantities that case names.
struct CaseTrace {
    MapId map = MapId::phi1_dd;
    std::string case_label;
    std::optional<int> k;
    std::optional<int> q;
    std::optional<int> r;
    std::optional<Partition> eta;
};

struct MapResult {
    Partition image;
    CaseTrace trace;
};

inline constexpr std::string_view kNotInImage = "not in image";

struct ImageWitness {
    MapId map = MapId::phi1_dd;
    /// "B1".."B5", "C1".."C5(v)", "E1".."E3", "tilde(i)".., or kNotInImage.
    std::string component;
    bool in_image() const { return component != kNotInImage; }
};

class MapIdError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input is outside the map's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// invert() was given a partition without a preimage.
class NotInImageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

ClassSpec domain_class(MapId m);
ClassSpec codomain_class(MapId m);
/// Output weight minus input weight.
int weight_shift(MapId m);
/// Weight restrictions on top of the domain class (phi4: n >= 8; phi5: even n >= 6;
/// psi: even n; f: n >= 1).
bool domain_admits_weight(MapId m, Weight n);
bool in_domain(MapId m, const Partition& p);

/// Throws DomainError outside the domain.
MapResult apply(MapId m, const Partition& p);

/// Computes the preimage from the characterization, then confirms that applying
/// the map to it gives back `mu`. Throws NotInImageError when the partition is
/// outside the characterized image or the formula does not produce a preimage.
Partition invert(MapId m, const Partition& mu);

/// First image component `mu` satisfies (components are tried in the order
/// listed by image_component_ids), or kNotInImage. Requires membership in the
/// codomain class at an admissible weight.
ImageWitness image_membership(MapId m, const Partition& mu);
/// Every component `mu` satisfies; used for the disjointness checks.
std::vector<std::string> image_components(MapId m, const Partition& mu);
std::vector<std::string> image_component_ids(MapId m);
/// Labels of every case predicate that holds for p (exactly one for domain members).
std::vector<std::string> matching_cases(MapId m, const Partition& p);

/// Aggregate description of C5 (odd part count one, 2 the only repeated part,
/// plus the conditions on 2m(2)). Should agree with the union of C5(i)-(v).
bool phi4_c5_aggregate(const Partition& mu);

/// Partitions of n in ed_od with both parities present and smallest even part
/// exactly one more than the largest odd part.
std::vector<Partition> excess_witnesses(int n);
/// The closed-form witness for n >= 11, chosen by n mod 4 (with 13 and 17 special).
std::optional<Partition> excess_family_witness(int n);

/// Closed-form members of the codomain at weight n that lie outside the image.
/// Empty when the map has no such family at that weight.
std::vector<Partition> non_image_witnesses(MapId m, int n);

}  // namespace psp
