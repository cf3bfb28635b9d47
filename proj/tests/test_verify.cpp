#include <gtest/gtest.h>

#include "json.hpp"
#include "psp/verify.hpp"

using namespace psp;
using nlohmann::json;

namespace {

InequalitySpec spec_named(const std::vector<InequalitySpec>& specs, const std::string& name) {
    for (const auto& s : specs) {
        if (s.name == name) return s;
    }
    ADD_FAILURE() << "no spec " << name;
    return {};
}

bool has_counterexample_at(const VerificationReport& r, int n) {
    for (const auto& c : r.counterexamples) {
        if (c.n == n) return true;
    }
    return false;
}

}  // namespace

TEST(Inequalities, ProvedThresholds) {
    const std::vector<std::pair<std::string, int>> expected{
        {"od_ed < ed_od", 11}, {"ou_eu < eu_ou", 3}, {"eu_od < ou_ed", 5}, {"od_eu < ed_ou", 2}, {"ed_od < od_eu", 8}};
    const auto specs = proved_inequality_specs();
    ASSERT_EQ(specs.size(), expected.size());
    for (const auto& [name, n0] : expected) {
        const auto s = spec_named(specs, name);
        EXPECT_EQ(s.claimed_threshold, n0);
        const auto r = check_inequality(s, 40);
        EXPECT_TRUE(r.pass) << name;
        EXPECT_EQ(r.empirical_threshold, n0) << name;
    }
}

TEST(Inequalities, SmallCaseReversalsAreReported) {
    const auto specs = proved_inequality_specs();
    EXPECT_TRUE(has_counterexample_at(check_inequality(spec_named(specs, "eu_od < ou_ed"), 40), 4));
    EXPECT_TRUE(has_counterexample_at(check_inequality(spec_named(specs, "ed_od < od_eu"), 40), 7));
    EXPECT_TRUE(has_counterexample_at(check_inequality(spec_named(specs, "od_ed < ed_od"), 40), 10));
}

TEST(Inequalities, ViolationAboveClaimFails) {
    InequalitySpec s = spec_named(proved_inequality_specs(), "ed_od < od_eu");
    s.claimed_threshold = 5;
    const auto r = check_inequality(s, 20);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.empirical_threshold, 8);
    ASSERT_FALSE(r.counterexamples.empty());
    EXPECT_EQ(r.counterexamples.front().n, 0);
}

TEST(Chain, SimultaneousThreshold) {
    const auto s = chain_summary(50);
    EXPECT_EQ(s.adjacent.size(), 7u);
    EXPECT_EQ(s.simultaneous_threshold, 50);
    const auto r = check_chain(50);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.empirical_threshold, 50);
    // eu_od < od_eu fails at every odd n below 50.
    EXPECT_FALSE(chain_summary(49).simultaneous_threshold.has_value());
}

TEST(Checks, CheapChecksPass) {
    EXPECT_TRUE(check_excess(50).pass);
    EXPECT_TRUE(check_nd_identities(40).pass);
    for (const auto& r : check_monotone(50)) EXPECT_TRUE(r.pass) << r.check;
    EXPECT_TRUE(check_classes_oracle(20).pass);
    EXPECT_TRUE(check_class_relations(30).pass);
}

TEST(Checks, ConjectureThreshold) {
    const auto r = check_conjecture(16);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.empirical_threshold, 3);
    for (const auto& c : r.counterexamples) EXPECT_LT(c.n, 3);
}

TEST(Checks, NdInequalitiesAreReportedNotAsserted) {
    const auto rs = check_nd_inequalities(50);
    ASSERT_EQ(rs.size(), 4u);
    const std::vector<int> thresholds{5, 4, 36, 5};
    for (std::size_t i = 0; i < rs.size(); ++i) {
        EXPECT_TRUE(rs[i].pass) << rs[i].check;
        EXPECT_EQ(rs[i].empirical_threshold, thresholds[i]) << rs[i].check;
        for (const auto& c : rs[i].counterexamples) {
            EXPECT_EQ(c.detail.find("claimed"), std::string::npos) << c.detail;
        }
    }
}

TEST(Checks, RoundTripsSmall) {
    for (MapId m : all_maps()) {
        const auto r = check_roundtrip(m, 24);
        if (m == MapId::phi4) {
            EXPECT_FALSE(r.pass);
            ASSERT_FALSE(r.counterexamples.empty());
        } else {
            EXPECT_TRUE(r.pass) << map_name(m);
        }
    }
}

TEST(Checks, ImageChecksSmall) {
    EXPECT_TRUE(check_image(MapId::phi1_dd, 24).pass);
    EXPECT_TRUE(check_image(MapId::phi1_uu, 24).pass);
    EXPECT_TRUE(check_image(MapId::psi, 24).pass);
    EXPECT_TRUE(check_image(MapId::f_shift, 24).pass);
    EXPECT_TRUE(check_image(MapId::bcn_append1, 24).pass);
    const auto phi3 = check_image(MapId::phi3, 24);
    EXPECT_FALSE(phi3.pass);
    ASSERT_FALSE(phi3.counterexamples.empty());
    EXPECT_EQ(phi3.counterexamples.front().n, 8);
}

TEST(Checks, CounterexamplesAreCappedAndAscending) {
    const auto r = check_image(MapId::phi5, 30);
    EXPECT_FALSE(r.pass);
    EXPECT_LE(r.counterexamples.size(), kMaxCounterexamples);
    for (std::size_t i = 1; i < r.counterexamples.size(); ++i) {
        EXPECT_LE(r.counterexamples[i - 1].n, r.counterexamples[i].n);
    }
}

TEST(Suites, NamesAndDeterminism) {
    EXPECT_TRUE(is_suite("all"));
    EXPECT_TRUE(is_suite("monotone"));
    EXPECT_FALSE(is_suite("everything"));
    const auto a = to_json("nd", run_suite("nd", 30));
    const auto b = to_json("nd", run_suite("nd", 30));
    EXPECT_EQ(a, b);
    EXPECT_THROW(run_suite("bogus"), std::invalid_argument);
}

TEST(Suites, ReportJsonSchema) {
    const auto doc = json::parse(to_json("chain", run_suite("chain", 20)));
    EXPECT_EQ(doc["suite"], "chain");
    ASSERT_TRUE(doc["reports"].is_array());
    for (const auto& r : doc["reports"]) {
        EXPECT_TRUE(r.contains("check"));
        EXPECT_TRUE(r["range"].is_array());
        EXPECT_EQ(r["range"].size(), 2u);
        EXPECT_TRUE(r["status"] == "pass" || r["status"] == "fail");
        EXPECT_TRUE(r.contains("empirical_threshold"));
        for (const auto& c : r["counterexamples"]) {
            EXPECT_TRUE(c["n"].is_number_integer());
            EXPECT_TRUE(c["detail"].is_string());
        }
    }
}
