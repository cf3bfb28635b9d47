#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psp {

using Part = int;
using Weight = std::int64_t;

/// Raised when a partition would be built from a non-positive part, or when a
/// multiset difference is requested for a non-sub-multiset.
class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An integer partition stored as a non-increasing vector of positive parts.
///
/// The part vector is the single source of truth; frequency views are derived
/// on demand. Instances are immutable values.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<Part> parts);

    /// Canonicalizes an arbitrary multiset of parts. Throws PartitionError on
    /// any entry < 1.
    static Partition from_parts(std::vector<Part> parts);

    std::span<const Part> parts() const noexcept { return parts_; }
    const std::vector<Part>& part_vector() const noexcept { return parts_; }
    Weight weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part accessor; returns 0 for j > length() (and for j == 0).
    Part part(std::size_t j) const noexcept {
        return (j >= 1 && j <= parts_.size()) ? parts_[j - 1] : 0;
    }
    Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    Part smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the part vector, so the reverse of this order is the
    /// documented enumeration order.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    struct Canonical {};
    Partition(Canonical, std::vector<Part> parts, Weight weight)
        : parts_(std::move(parts)), weight_(weight) {}

    std::vector<Part> parts_;
    Weight weight_ = 0;
};

/// A (value, multiplicity) pair of the frequency view, largest value first.
struct Frequency {
    Part value;
    std::size_t multiplicity;
    friend bool operator==(const Frequency&, const Frequency&) = default;
};

struct PartitionStats {
    std::size_t ell = 0;
    std::size_t ell_odd = 0;
    std::size_t ell_even = 0;
    /// min(ell_odd, ell_even); present only when both are positive.
    std::optional<std::size_t> ell_min;
    std::optional<Part> largest_odd;
    std::optional<Part> smallest_odd;
    std::optional<Part> largest_even;
    std::optional<Part> smallest_even;
    /// Least part value with multiplicity >= 2.
    std::optional<Part> smallest_repeated;
    /// Second least part value with multiplicity >= 2.
    std::optional<Part> second_smallest_repeated;
};

Partition odd_sub(const Partition& p);
Partition even_sub(const Partition& p);

PartitionStats stats(const Partition& p);
std::vector<Frequency> frequencies(const Partition& p);

std::size_t multiplicity(const Partition& p, Part j);
std::size_t count_greater(const Partition& p, Part j);
std::size_t count_at_least(const Partition& p, Part j);
/// Smallest part strictly larger than j. Defined for every j, not only for
/// parts of p; absent when no part exceeds j.
std::optional<Part> next_larger(const Partition& p, Part j);

bool is_distinct(const Partition& p);
bool contains(const Partition& p, Part j);

Partition msunion(const Partition& a, const Partition& b);
/// Multiset difference a \ b. Throws PartitionError unless b is a sub-multiset of a.
Partition msdiff(const Partition& a, const Partition& b);

/// Adds `count` copies of `value` (value >= 1).
Partition with_copies(const Partition& p, Part value, std::size_t count);
/// Removes `count` copies of `value`; throws PartitionError if too few exist.
Partition without_copies(const Partition& p, Part value, std::size_t count);

/// Left-justified rows of `glyph`, one line per part, each line newline-terminated.
std::string render_ferrers(const Partition& p, char glyph = '#');

/// Space-separated parts, non-increasing; caret form `v^m` when m > 2. The
/// empty partition prints as "()".
std::string to_string(const Partition& p);

/// Parses the text form: whitespace- or comma-separated entries, each `v` or
/// `v^m`, optionally wrapped in parentheses. Entry order is free; the result
/// is canonicalized. Throws PartitionError on malformed input.
Partition parse_partition(std::string_view text);

/// Incremental construction without repeated re-sorting.
class PartitionBuilder {
public:
    PartitionBuilder() = default;
    explicit PartitionBuilder(const Partition& seed);

    PartitionBuilder& add(Part value, std::size_t count = 1);
    PartitionBuilder& add_all(std::span<const Part> values);
    Partition build() const;

private:
    std::vector<Part> parts_;
};

}  // namespace psp

template <>
struct std::hash<psp::Partition> {
    std::size_t operator()(const psp::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (psp::Part x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};
