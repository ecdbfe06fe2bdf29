#include "oracles.hpp"

#include <factstat/class_function.hpp>
#include <factstat/stat_expr.hpp>

#include <gtest/gtest.h>

using namespace factstat;

namespace {

QInvSeries monomial_series(std::size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1, 0);
    v[k] = c;
    return QInvSeries(std::move(v));
}

}  // namespace

TEST(MurnaghanNakayama, AgreesWithJacobiTrudiOracle) {
    for (unsigned d = 1; d <= 6; ++d) {
        auto classes = oracle::conjugacy_classes(d);
        for (const auto& mu : partitions_of(d))
            for (const auto& [type, info] : classes)
                EXPECT_EQ(mn_character(mu, Partition(type)), oracle::jacobi_trudi_character(mu.parts(), info.representative))
                    << to_string(mu) << " at " << to_string(Partition(type));
    }
}

TEST(MurnaghanNakayama, KnownValues) {
    EXPECT_EQ(mn_character(Partition{2, 1}, Partition{1, 1, 1}), 2);
    EXPECT_EQ(mn_character(Partition{2, 1}, Partition{3}), -1);
    EXPECT_EQ(mn_character(Partition{2, 2}, Partition{2, 1, 1}), 0);
    EXPECT_EQ(hook_dim(Partition{3, 2}), 5);
    EXPECT_EQ(hook_dim(Partition{4, 2, 1}), 35);
}

TEST(MurnaghanNakayamaProperty, Orthogonality) {
    for (unsigned d = 1; d <= 8; ++d) {
        auto table = character_table(d);
        for (std::size_t i = 0; i < table.partitions.size(); ++i)
            for (std::size_t j = 0; j < table.partitions.size(); ++j)
                EXPECT_EQ(inner(table.irreducibles[i], table.irreducibles[j]), i == j ? 1 : 0);
    }
}

TEST(MurnaghanNakayamaProperty, DimensionsSquareSumIsFactorial) {
    for (unsigned d = 1; d <= 12; ++d) {
        Integer sum = 0;
        for (const auto& mu : partitions_of(d)) {
            const Integer f = hook_dim(mu);
            if (d <= 9) EXPECT_EQ(f, mn_character(mu, Partition::ones(d)));
            sum += f * f;
        }
        EXPECT_EQ(sum, factorial(d)) << "d=" << d;
    }
}

TEST(ClassFunction, InnerProductExamples) {
    auto psi3 = compute_character_family(3, CharacterKind::psi);
    EXPECT_EQ(inner(quad_excess_function(3), family_row(psi3, 1)), 2);
    EXPECT_EQ(inner(quad_excess_function(3), family_row(psi3, 2)), 1);
    EXPECT_EQ(inner(sign_function(3), family_row(psi3, 2)), 0);
    EXPECT_EQ(inner(sign_function(3), family_row(psi3, 1)), 1);
    EXPECT_EQ(inner(trivial_function(5), trivial_function(5)), 1);
    EXPECT_THROW(inner(trivial_function(4), trivial_function(5)), std::invalid_argument);
}

TEST(ClassFunction, BuiltinValues) {
    // m1 = 3, m2 = 4: binom(3,2) - 4 = -1.
    EXPECT_EQ(quad_excess_function(11)(Partition{2, 2, 2, 2, 1, 1, 1}), -1);
    EXPECT_EQ(part_count_function(5, 1)(Partition{2, 1, 1, 1}), 3);
    EXPECT_EQ(even_type_function(5)(Partition{3, 1, 1}), 1);
    EXPECT_EQ(even_type_function(5)(Partition{2, 1, 1, 1}), 0);
    EXPECT_EQ(sign_function(4)(Partition{4}), -1);
}

TEST(ClassFunction, Arithmetic) {
    ClassFunction et = even_type_function(6);
    ClassFunction half = trivial_function(6) + sign_function(6);
    half *= make_rational(1, 2);
    EXPECT_EQ(et, half);
    EXPECT_EQ(trivial_function(6) - trivial_function(6), ClassFunction(6));
}

TEST(Decompose, QuadExcessIsStdPlusWedgeStd) {
    for (unsigned d = 4; d <= 10; ++d) {
        std::vector<unsigned> a{d - 1, 1}, b{d - 2, 1, 1};
        auto dec = decompose(quad_excess_function(d));
        for (const auto& [mu, m] : dec)
            EXPECT_EQ(m, (mu == Partition(a) || mu == Partition(b)) ? 1 : 0) << "d=" << d << " " << to_string(mu);
    }
}

TEST(Decompose, RoundTripOnBuiltins) {
    for (unsigned d = 1; d <= 9; ++d) {
        auto table = character_table(d);
        for (const auto& name : builtin_names()) {
            ClassFunction p = builtin(name)(d);
            EXPECT_EQ(reconstruct(decompose(p, table), table), p) << name << " d=" << d;
        }
    }
    EXPECT_FALSE(is_character({{Partition{2}, make_rational(1, 2)}}));
    EXPECT_FALSE(is_character({{Partition{2}, -1}}));
    EXPECT_TRUE(is_character({{Partition{2}, 3}}));
}

TEST(ExpectedValue, SignAndEvenType) {
    for (unsigned d = 1; d <= 12; ++d) {
        const unsigned h = d / 2;
        EXPECT_EQ(expected_value(sign_function(d)), monomial_series(h, 1)) << "d=" << d;
        QInvSeries et = QInvSeries{make_rational(1, 2)} + monomial_series(h, make_rational(1, 2));
        EXPECT_EQ(expected_value(even_type_function(d)), et) << "d=" << d;
    }
}

TEST(ExpectedValue, RootsAndStd) {
    for (unsigned d = 1; d <= 12; ++d) {
        EXPECT_EQ(expected_value(part_count_function(d, 1)), QInvSeries(std::vector<Rational>(d, 1)));
        auto std_char = part_count_function(d, 1) - trivial_function(d);
        auto psi = compute_character_family(d, CharacterKind::psi);
        for (unsigned k = 1; k < d; ++k) EXPECT_EQ(inner(std_char, family_row(psi, k)), 1);
    }
}

TEST(ExpectedValue, CharacterAndMeasurePathsAgree) {
    for (unsigned d = 2; d <= 10; ++d) {
        auto all = measure_table(d, Flavor::all), sf = measure_table(d, Flavor::squarefree);
        for (const auto& name : builtin_names()) {
            ClassFunction p = builtin(name)(d);
            EXPECT_EQ(expected_value(p), expected_value_from_measure(p, all)) << name << " d=" << d;
            EXPECT_EQ(expected_value_sf(p), expected_value_from_measure(p, sf)) << name << " d=" << d;
        }
        EXPECT_EQ(expected_value_sf(even_type_function(d)), QInvSeries{make_rational(1, 2)});
    }
    EXPECT_THROW(expected_value_sf(trivial_function(1)), std::invalid_argument);
}
