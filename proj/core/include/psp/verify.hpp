#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psp/classes.hpp"
#include "psp/maps.hpp"

namespace psp {

enum class Relation : std::uint8_t { less, less_equal, equal };
enum class ParityFilter : std::uint8_t { all, even, odd };

/// Compares count(lhs, n) with count(rhs, n + rhs_shift) for every admissible n.
struct InequalitySpec {
    std::string name;
    ClassSpec lhs;
    ClassSpec rhs;
    Relation relation = Relation::less;
    /// Least n from which the relation is claimed; absent for "sufficiently large".
    std::optional<int> claimed_threshold;
    ParityFilter parity = ParityFilter::all;
    int rhs_shift = 0;
};

struct Counterexample {
    int n = 0;
    std::string detail;
};

struct VerificationReport {
    std::string check;
    int n_lo = 0;
    int n_hi = 0;
    bool pass = true;
    /// Least n such that the relation holds at every tested n >= it.
    std::optional<int> empirical_threshold;
    /// Ascending n, at most kMaxCounterexamples entries.
    std::vector<Counterexample> counterexamples;
};

inline constexpr std::size_t kMaxCounterexamples = 10;

/// Default ranges: counts 50, exhaustive map checks 40, image exactness 36,
/// round trips of the cheap maps 50, class oracle 30, conjecture index 30.
struct Defaults {
    static constexpr int counts = 50;
    static constexpr int maps = 40;
    static constexpr int images = 36;
    static constexpr int cheap_roundtrips = 50;
    static constexpr int oracle = 30;
    static constexpr int conjecture = 30;
    static constexpr int nd_identities = 40;
};

VerificationReport check_inequality(const InequalitySpec& spec, int n_max);

/// The seven adjacent strict relations of the chain
/// od_ed < ed_od < eu_od < od_eu < ou_ed < ou_eu < ed_ou < eu_ou.
std::vector<InequalitySpec> chain_specs();
/// The five inequalities proved by the injections, with their starting points.
std::vector<InequalitySpec> proved_inequality_specs();

struct ChainSummary {
    std::vector<VerificationReport> adjacent;
    /// Least n0 such that all seven relations hold at every n in [n0, n_max].
    std::optional<int> simultaneous_threshold;
};
ChainSummary chain_summary(int n_max);
/// Passes iff the seven relations hold simultaneously on a nonempty tail of [0, n_max].
VerificationReport check_chain(int n_max);

VerificationReport check_roundtrip(MapId m, int n_max);
VerificationReport check_image(MapId m, int n_max);
VerificationReport check_excess(int n_max);
/// n ranges over the index of bar-ou_eu(2n) < bar-eu_ou(2n+1); asserted for n >= 3.
VerificationReport check_conjecture(int n_max);
VerificationReport check_nd_identities(int n_max);
std::vector<InequalitySpec> nd_inequality_specs();
std::vector<VerificationReport> check_nd_inequalities(int n_max);
std::vector<InequalitySpec> monotone_specs();
std::vector<VerificationReport> check_monotone(int n_max);
/// Direct enumeration equals the filtered oracle enumeration for every class,
/// and is emitted in strictly decreasing (reverse-lexicographic) order.
VerificationReport check_classes_oracle(int n_max);
/// Inclusion chains ed_od in eu_od, ou_ed in ou_eu, ed_ou in eu_ou; overline
/// parity vanishing and even length in bar-eu_ou.
VerificationReport check_class_relations(int n_max);

/// "all", "chain", "images", "roundtrips", "conjecture", "nd", "monotone", "classes".
std::vector<std::string_view> suite_names();
bool is_suite(std::string_view name);
/// Runs the suite's checks concurrently; the result order is fixed. When n_max is
/// given it replaces every per-check default. Throws std::invalid_argument for an
/// unknown suite name.
std::vector<VerificationReport> run_suite(std::string_view suite, std::optional<int> n_max = std::nullopt);

bool all_pass(const std::vector<VerificationReport>& reports);

/// {check, range, status, empirical_threshold, counterexamples: [{n, detail}]}
std::string to_json(const VerificationReport& report, int indent = 2);
/// {suite, status, reports: [...]}
std::string to_json(std::string_view suite, const std::vector<VerificationReport>& reports, int indent = 2);
/// {map, case, k, q, r, eta} with nulls for absent fields.
std::string to_json(const CaseTrace& trace, int indent = -1);

}  // namespace psp
