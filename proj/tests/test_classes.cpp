#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "frozen_counts.hpp"
#include "oracle.hpp"
#include "psp/classes.hpp"

using namespace psp;

namespace {

Partition to_partition(const psp_test::oracle::Parts& v) { return Partition::from_parts(v); }

}  // namespace

TEST(ClassId, ParsesEveryValidId) {
    const auto specs = all_class_specs();
    EXPECT_EQ(specs.size(), 20u);
    for (const auto& c : specs) EXPECT_EQ(parse_class_id(to_string(c)), c) << to_string(c);
    EXPECT_EQ(to_string(parse_class_id("bar-ou_eu")), "bar-ou_eu");
    EXPECT_EQ(to_string(parse_class_id("ond_eu")), "ond_eu");
}

TEST(ClassId, RejectsMalformedIds) {
    for (const char* bad : {"", "ou", "ou_ou", "ed_ed", "ox_eu", "bar-od_ed", "bar-eu_od", "ou_eu_", "ED_OU", "bar_ou_eu"}) {
        EXPECT_THROW(parse_class_id(bad), ClassIdError) << bad;
    }
}

TEST(Membership, WorkedExamples) {
    EXPECT_TRUE(is_member(Partition{4, 1, 1}, classes::ed_ou()));
    EXPECT_TRUE(is_member(Partition{3, 3}, classes::ed_ou()));
    EXPECT_FALSE(is_member(Partition{3, 3}, classes::ed_od()));
    EXPECT_TRUE(is_member(Partition{11, 11, 9, 9, 8, 2, 2}, classes::bar_ou_eu()));
    EXPECT_FALSE(is_member(Partition{2, 1}, classes::od_eu()));
    EXPECT_TRUE(is_member(Partition{2, 1}, classes::eu_od()));
}

TEST(Membership, EmptyPartition) {
    for (const auto& c : all_class_specs()) {
        const std::string id = to_string(c);
        const bool nd = id.find("nd") != std::string::npos;
        EXPECT_EQ(is_member(Partition{}, c), !nd && id != "bar-eu_ou") << id;
    }
}

TEST(Enumeration, EdOuSix) {
    const std::vector<Partition> expected{{6}, {5, 1}, {4, 2}, {4, 1, 1}, {3, 3}, {3, 1, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    EXPECT_EQ(enumerate_class(6, classes::ed_ou()), expected);
    EXPECT_EQ(enumerate_class(7, classes::ed_od()).size(), 4u);
}

TEST(Enumeration, WeightZero) {
    for (const auto& c : all_class_specs()) {
        const std::string id = to_string(c);
        if (id.find("nd") != std::string::npos || id == "bar-eu_ou") continue;
        EXPECT_EQ(enumerate_class(0, c), std::vector<Partition>{Partition{}}) << id;
    }
}

TEST(Enumeration, AllPartitions) {
    EXPECT_EQ(enumerate_all(4).size(), 5u);
    EXPECT_EQ(enumerate_all(0), std::vector<Partition>{Partition{}});
    EXPECT_EQ(enumerate_all(16).size(), 231u);
    const auto pn = psp_test::oracle::partition_numbers(50);
    for (int n = 0; n <= 50; ++n) {
        EXPECT_EQ(pn[static_cast<std::size_t>(n)], psp_test::kPartitionCounts[static_cast<std::size_t>(n)]);
    }
    for (int n = 0; n <= 40; ++n) {
        std::uint64_t c = 0;
        for_each_partition(n, [&](const Partition&) { ++c; });
        EXPECT_EQ(c, pn[static_cast<std::size_t>(n)]) << n;
    }
}

TEST(Enumeration, AllPartitionsMatchesOracleOrder) {
    for (int n = 0; n <= 18; ++n) {
        const auto ref = psp_test::oracle::all_partitions(n);
        const auto got = enumerate_all(n);
        ASSERT_EQ(got.size(), ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(got[i], to_partition(ref[i]));
    }
}

TEST(Enumeration, ClassesMatchOracleMembership) {
    for (int n = 0; n <= 20; ++n) {
        const auto all = psp_test::oracle::all_partitions(n);
        for (const auto& c : all_class_specs()) {
            const std::string id = to_string(c);
            std::vector<Partition> expected;
            for (const auto& p : all) {
                if (psp_test::oracle::member(p, id)) expected.push_back(to_partition(p));
            }
            EXPECT_EQ(enumerate_class(n, c), expected) << id << " n=" << n;
            for (const auto& p : all) {
                EXPECT_EQ(is_member(to_partition(p), c), psp_test::oracle::member(p, id)) << id;
            }
        }
    }
}

TEST(Counts, FrozenTable) {
    for (const auto& row : psp_test::kFrozenCounts) {
        const ClassSpec c = parse_class_id(row.class_id);
        const auto seq = count_sequence(c, 50);
        ASSERT_EQ(seq.size(), 51u);
        for (std::size_t n = 0; n <= 50; ++n) EXPECT_EQ(seq[n], row.counts[n]) << row.class_id << " n=" << n;
    }
}

TEST(Counts, OdEdSixteenByFiltering) {
    EXPECT_EQ(count_class(16, classes::od_ed()), psp_test::oracle::count(16, "od_ed"));
    EXPECT_EQ(count_class(16, classes::od_ed()), 14u);
}

TEST(Counts, KnownSmallValues) {
    EXPECT_EQ(count_class(6, classes::ed_ou()), 8u);
    EXPECT_EQ(count_class(4, classes::eu_od()), 3u);
    EXPECT_EQ(count_class(4, classes::ou_ed()), 3u);
    EXPECT_EQ(count_class(2, classes::ou_eu()), 2u);
    EXPECT_EQ(count_class(2, classes::eu_ou()), 2u);
    EXPECT_EQ(count_class(7, classes::ed_od()), 4u);
    EXPECT_EQ(count_class(7, classes::od_eu()), 3u);
    EXPECT_EQ(count_class(1, classes::eu_od()), 1u);
    EXPECT_EQ(count_class(1, classes::od_eu()), 1u);
    EXPECT_EQ(count_class(1, classes::ed_ou()), 1u);
    EXPECT_EQ(count_class(1, classes::ou_eu()), 1u);
}

TEST(Counts, NegativeWeightIsEmpty) {
    EXPECT_EQ(count_class(-1, classes::ou_eu()), 0u);
    EXPECT_TRUE(enumerate_class(-3, classes::ou_eu()).empty());
}

TEST(Counts, OverlineParityFacts) {
    for (int n = 1; n <= 30; n += 2) EXPECT_EQ(count_class(n, classes::bar_ou_eu()), 0u) << n;
    for (int n = 0; n <= 30; ++n) {
        for_each_member(n, classes::bar_eu_ou(), [&](const Partition& p) { EXPECT_EQ(p.length() % 2, 0u); });
    }
}
