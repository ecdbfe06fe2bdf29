#include "oracles.hpp"

#include <factstat/partition.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace factstat;

TEST(Partitions, SmallCasesInReverseLexOrder) {
    auto p3 = partitions_of(3);
    ASSERT_EQ(p3.size(), 3u);
    EXPECT_EQ(p3[0], (Partition{3}));
    EXPECT_EQ(p3[1], (Partition{2, 1}));
    EXPECT_EQ(p3[2], (Partition{1, 1, 1}));

    auto p0 = partitions_of(0);
    ASSERT_EQ(p0.size(), 1u);
    EXPECT_TRUE(p0[0].empty());
}

TEST(Partitions, CountsAgainstRecurrenceAndBruteForce) {
    const auto expected = oracle::partition_counts(16);
    for (unsigned n = 0; n <= 16; ++n) {
        auto parts = partitions_of(n);
        EXPECT_EQ(parts.size(), expected[n]) << "n = " << n;
        for (std::size_t i = 1; i < parts.size(); ++i) EXPECT_GT(parts[i - 1], parts[i]);
    }
    EXPECT_EQ(partitions_of(10).size(), 42u);
    for (unsigned n = 0; n <= 12; ++n) {
        std::set<std::vector<unsigned>> ours;
        for (const auto& p : partitions_of(n)) ours.insert(p.parts());
        EXPECT_EQ(ours, oracle::partitions_via_compositions(n)) << "n = " << n;
    }
}

TEST(Partitions, CentralizerOrder) {
    EXPECT_EQ((Partition{1, 1, 1}).z(), 6);
    EXPECT_EQ((Partition{2, 1}).z(), 2);
    EXPECT_EQ((Partition{3}).z(), 3);
    EXPECT_EQ((Partition{2, 2, 1}).z(), 8);
}

TEST(Partitions, SignRankMultiplicity) {
    EXPECT_EQ((Partition{3, 1, 1}).sign(), 1);
    EXPECT_EQ((Partition{2, 1, 1, 1}).sign(), -1);
    EXPECT_EQ(Partition::ones(7).sign(), 1);
    EXPECT_EQ((Partition{1, 1, 1}).rank(), 0u);
    EXPECT_EQ((Partition{3}).rank(), 2u);
    EXPECT_EQ((Partition{2, 1, 1, 1}).multiplicity(1), 3u);
    EXPECT_EQ((Partition{2, 1, 1, 1}).multiplicity(2), 1u);
    EXPECT_EQ((Partition{2, 1, 1, 1}).multiplicity(4), 0u);
    EXPECT_EQ(to_exponent_string(Partition{2, 1, 1, 1}), "(1^3 2^1)");
    EXPECT_EQ(to_string(Partition{2, 1, 1, 1}), "[2,1,1,1]");
}

TEST(Partitions, CanonicalFormAndConjugate) {
    EXPECT_EQ((Partition{1, 3, 1}), (Partition{3, 1, 1}));
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_EQ((Partition{3, 1}).conjugate(), (Partition{2, 1, 1}));
    for (const auto& p : partitions_of(9)) EXPECT_EQ(p.conjugate().conjugate(), p);
}

TEST(PartitionsProperty, ClassSizesAndSigns) {
    for (unsigned d = 1; d <= 12; ++d) {
        Integer total = 0, signed_total = 0;
        for (const auto& p : partitions_of(d)) {
            const Integer size = factorial(d) / p.z();
            total += size;
            signed_total += p.sign() * size;
            EXPECT_LE(p.rank(), d - 1);
            EXPECT_EQ(p.rank() == 0, p == Partition::ones(d));
            EXPECT_EQ(p.rank() == d - 1, p == Partition{d});
        }
        EXPECT_EQ(total, factorial(d));
        if (d >= 2) EXPECT_EQ(signed_total, 0);
    }
}

TEST(PartitionsProperty, ClassSizesAndSignsMatchPermutationWalk) {
    for (unsigned d = 1; d <= 7; ++d) {
        for (const auto& [type, info] : oracle::conjugacy_classes(d)) {
            Partition p(type);
            EXPECT_EQ(factorial(d) / p.z(), info.size);
            EXPECT_EQ(p.sign(), info.sign);
        }
    }
}
