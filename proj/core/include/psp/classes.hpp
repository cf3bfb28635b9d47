#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psp/partition.hpp"

namespace psp {

enum class Parity : std::uint8_t { odd, even };
enum class Restriction : std::uint8_t { unrestricted, distinct, not_distinct };

/// Multiplicity-parity refinements of ou_eu (low_variant) and eu_ou (high_variant).
///
/// low_variant ("bar-ou_eu"): the largest even part has odd multiplicity and every
/// other part has even multiplicity. A partition with no even parts counts as having
/// one virtual zero part, so it qualifies iff every multiplicity is even (this admits
/// the empty partition).
///
/// high_variant ("bar-eu_ou"): both parities occur, the largest even and the largest
/// odd part each have odd multiplicity, all other parts even multiplicity. The empty
/// partition is rejected.
enum class Overline : std::uint8_t { none, high_variant, low_variant };

struct BlockSpec {
    Parity parity = Parity::odd;
    Restriction restriction = Restriction::unrestricted;
    friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// A class of partitions with parts separated by parity: every part of the
/// high block's parity exceeds every part of the low block's parity.
struct ClassSpec {
    BlockSpec high;
    BlockSpec low;
    Overline overline = Overline::none;
    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

class ClassIdError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "HIGH_LOW" with HIGH, LOW in {ou, od, ond, eu, ed, end}, optionally
/// prefixed by "bar-" (only "bar-ou_eu" and "bar-eu_ou" are valid).
ClassSpec parse_class_id(std::string_view id);
std::string to_string(const ClassSpec& c);

/// Every valid ClassId: the 18 plain classes followed by the two overline classes.
std::vector<ClassSpec> all_class_specs();

bool is_member(const Partition& p, const ClassSpec& c);

/// Direct constrained generation of the members of c with weight n, in
/// reverse-lexicographic order of part vectors. The visitor sees each member once.
void for_each_member(int n, const ClassSpec& c, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_class(int n, const ClassSpec& c);

std::uint64_t count_class(int n, const ClassSpec& c);
/// Counts for weights 0..n_max.
std::vector<std::uint64_t> count_sequence(const ClassSpec& c, int n_max);

/// Every partition of n in reverse-lexicographic order. Uses a successor
/// algorithm independent of the constrained generator.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_all(int n);

namespace classes {
// Named shorthands for the classes used throughout.
ClassSpec od_ed();
ClassSpec ed_od();
ClassSpec eu_od();
ClassSpec od_eu();
ClassSpec ou_ed();
ClassSpec ou_eu();
ClassSpec ed_ou();
ClassSpec eu_ou();
ClassSpec bar_ou_eu();
ClassSpec bar_eu_ou();
}  // namespace classes

}  // namespace psp
