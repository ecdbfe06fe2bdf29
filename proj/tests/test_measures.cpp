#include "oracles.hpp"

#include <factstat/measures.hpp>

#include <gtest/gtest.h>

using namespace factstat;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

/// Counts of monic degree-d GF(2) polynomials by factorization type, from
/// the bit-mask factorizer.
std::map<std::vector<unsigned>, long> gf2_census(unsigned d, bool squarefree_only) {
    std::map<std::vector<unsigned>, long> out;
    for (std::uint64_t low = 0; low < (1ull << d); ++low) {
        bool sf = true;
        auto type = oracle::gf2_factor_degrees((1ull << d) | low, &sf);
        if (squarefree_only && !sf) continue;
        ++out[type];
    }
    return out;
}

}  // namespace

TEST(Necklace, Values) {
    EXPECT_EQ(necklace(1), QPoly::q());
    EXPECT_EQ(necklace(2), (QPoly{0, r(-1, 2), r(1, 2)}));
    EXPECT_EQ(necklace(6), (QPoly{0, 1, -1, -1, 0, 0, 1} * r(1, 6)));
    EXPECT_THROW(necklace(0), std::invalid_argument);
}

TEST(Necklace, SexticIrreduciblesOverF2) {
    long brute = 0;
    for (std::uint64_t low = 0; low < 64; ++low) brute += oracle::gf2_irreducible(64 | low);
    EXPECT_EQ(brute, 9);
    EXPECT_EQ(necklace(6).eval_at(2), 9);
}

TEST(Necklace, IntegerValuedWithLeadingCoefficient) {
    for (unsigned j = 1; j <= 16; ++j) {
        QPoly m = necklace(j);
        EXPECT_EQ(m.degree(), static_cast<long>(j));
        EXPECT_EQ(m.leading(), r(1, j));
        for (long x = -6; x <= 9; ++x) EXPECT_TRUE(is_integer(m.eval_at(x))) << "j=" << j << " x=" << x;
    }
}

TEST(Counts, AllPolynomials) {
    EXPECT_EQ(count_all(Partition{1, 1, 1}), (QPoly{0, 2, 3, 1} * r(1, 6)));
    EXPECT_EQ(count_all(Partition{3}), (QPoly{0, -1, 0, 1} * r(1, 3)));
    // Oracle: 8 monic cubics over F_2.
    auto census = gf2_census(3, false);
    EXPECT_EQ((census[{1, 1, 1}]), 4);
    EXPECT_EQ(count_all(Partition{1, 1, 1}).eval_at(2), 4);
    EXPECT_EQ((census[{2, 1}]), 2);
    EXPECT_EQ(count_all(Partition{2, 1}).eval_at(2), 2);
}

TEST(Counts, SquarefreePolynomials) {
    EXPECT_EQ(count_sf(Partition{1, 1}), (QPoly{0, -1, 1} * r(1, 2)));
    EXPECT_EQ(count_sf(Partition{1, 1, 1}).eval_at(2), 0);
    EXPECT_EQ(count_sf(Partition{2}), (QPoly{0, -1, 1} * r(1, 2)));
}

TEST(Counts, AgreeWithGF2BitmaskOracle) {
    for (unsigned d = 1; d <= 10; ++d) {
        auto all = gf2_census(d, false), sf = gf2_census(d, true);
        for (const auto& lambda : partitions_of(d)) {
            EXPECT_EQ(count_all(lambda).eval_at(2), all[lambda.parts()]) << to_string(lambda);
            EXPECT_EQ(count_sf(lambda).eval_at(2), sf[lambda.parts()]) << to_string(lambda);
        }
    }
}

TEST(SplittingMeasure, Values) {
    EXPECT_EQ(splitting_measure(Partition{1}), QInvSeries{1});
    EXPECT_EQ(splitting_measure(Partition{6}), (QInvSeries{r(1, 6), 0, 0, r(-1, 6), r(-1, 6), r(1, 6)}));
    EXPECT_EQ(splitting_measure(Partition{3}).eval_at(2), r(1, 4));
}

TEST(SplittingMeasure, SquarefreeValues) {
    EXPECT_EQ(sf_splitting_measure(Partition{2}), QInvSeries{r(1, 2)});
    EXPECT_EQ(sf_splitting_measure(Partition{1, 1}), QInvSeries{r(1, 2)});
    // binom(q,3) / (q^3 - q^2) = (q - 2) / (6q).
    EXPECT_EQ(sf_splitting_measure(Partition{1, 1, 1}), (QInvSeries{r(1, 6), r(-1, 3)}));
    // One squarefree [1,1,1] cubic over F_3 (x(x-1)(x+1)) among 27 - 9.
    EXPECT_EQ(sf_splitting_measure(Partition{1, 1, 1}).eval_at(3), r(1, 18));
    EXPECT_THROW(sf_splitting_measure(Partition{1}), std::invalid_argument);
}

TEST(MeasureTable, SumsToOne) {
    auto t3 = measure_table(3, Flavor::all);
    EXPECT_EQ(t3.total(), QInvSeries{1});
    EXPECT_EQ(t3.entries.size(), 3u);
    auto t1 = measure_table(1, Flavor::all);
    ASSERT_EQ(t1.entries.size(), 1u);
    EXPECT_EQ(t1.entries.begin()->second, QInvSeries{1});
    EXPECT_EQ(measure_table(6, Flavor::all).entries.at(Partition{6}), splitting_measure(Partition{6}));
    EXPECT_THROW(measure_table(1, Flavor::squarefree), std::invalid_argument);
    EXPECT_THROW(measure_table(0, Flavor::all), std::invalid_argument);
}

TEST(MeasuresProperty, CountIdentitiesAndLengths) {
    for (unsigned d = 1; d <= 12; ++d) {
        QPoly all, sf;
        for (const auto& lambda : partitions_of(d)) {
            all += count_all(lambda);
            sf += count_sf(lambda);
            EXPECT_LE(splitting_measure(lambda).size(), d);
            if (d >= 2) EXPECT_LE(sf_splitting_measure(lambda).size(), d - 1);
        }
        EXPECT_EQ(all, QPoly::monomial(d));
        if (d >= 2) EXPECT_EQ(sf, QPoly::monomial(d) - QPoly::monomial(d - 1));
        if (d >= 2) EXPECT_EQ(measure_table(d, Flavor::squarefree).total(), QInvSeries{1});
    }
}

TEST(MeasuresProperty, AtQEqualsOneOnlyIdentityTypeSurvives) {
    for (unsigned d = 1; d <= 12; ++d)
        for (const auto& lambda : partitions_of(d))
            EXPECT_EQ(splitting_measure(lambda).eval_at(1), lambda == Partition::ones(d) ? 1 : 0) << to_string(lambda);
}

TEST(MeasuresProperty, ValuesAreProbabilities) {
    for (long qv : {2, 3, 4, 5, 7})
        for (unsigned d = 2; d <= 8; ++d)
            for (const auto& lambda : partitions_of(d))
                for (const auto& s : {splitting_measure(lambda), sf_splitting_measure(lambda)}) {
                    Rational v = s.eval_at(qv);
                    EXPECT_GE(v, 0);
                    EXPECT_LE(v, 1);
                }
}
