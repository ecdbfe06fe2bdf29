#include <factstat/qpoly.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace factstat;

namespace {

QPoly q() { return QPoly::q(); }

QPoly random_poly(std::mt19937& rng, int max_degree = 5) {
    std::uniform_int_distribution<int> deg(-1, max_degree), num(-9, 9), den(1, 6);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) x = make_rational(num(rng), den(rng));
    return QPoly(std::move(c));
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    return make_rational(num(rng), den(rng));
}

}  // namespace

TEST(Rational, StoredInLowestTerms) {
    Rational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(to_string(make_rational(8, 4)), "2");
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(QPoly, TrimsTrailingZeros) {
    QPoly z{0, 0, 0};
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    QPoly p{1, 2, 0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE((q() - q()).is_zero());
}

TEST(QPoly, Multichoose) {
    EXPECT_EQ(poly_multichoose(q(), 3), (QPoly{0, 2, 3, 1} * make_rational(1, 6)));
    EXPECT_EQ(poly_multichoose(QPoly{1, 5, -2}, 0), QPoly{1});
    // 4 multisets of size 3 from a 2-element set: {aaa, aab, abb, bbb}.
    EXPECT_EQ(poly_multichoose(QPoly{2}, 3).eval_at(0), 4);
    EXPECT_EQ(poly_multichoose(q() * q(), 4).degree(), 8);
}

TEST(QPoly, Binomial) {
    EXPECT_EQ(poly_binomial(q(), 2), (QPoly{0, -1, 1} * make_rational(1, 2)));
    QPoly p{3, 0, 7};
    EXPECT_EQ(poly_binomial(p, 1), p);
    EXPECT_EQ(poly_binomial(QPoly{3}, 2).eval_at(0), 3);
}

TEST(QPoly, CoeffAndEval) {
    QPoly p{0, -1, 1};
    EXPECT_EQ(p.coeff(1), -1);
    EXPECT_EQ(p.coeff(5), 0);
    EXPECT_EQ(poly_multichoose(q(), 3).coeff(2), make_rational(1, 2));
    EXPECT_EQ(p.eval_at(2), 2);
    QPoly r{7, 1, 1};
    EXPECT_EQ(r.eval_at(0), 7);
}

TEST(QPoly, ExactDivision) {
    QPoly a{1, 2, 1};  // (q+1)^2
    EXPECT_EQ(exact_divide(a, QPoly{1, 1}), (QPoly{1, 1}));
    EXPECT_THROW(exact_divide(a, QPoly{0, 1}), internal_error);
    auto [quot, rem] = divmod(QPoly{5, 0, 1}, QPoly{-1, 1});
    EXPECT_EQ(quot, (QPoly{1, 1}));
    EXPECT_EQ(rem, QPoly{6});
    EXPECT_THROW(divmod(a, QPoly{}), std::domain_error);
}

TEST(QPolyProperty, PascalIdentityForPolynomialArgument) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 25; ++trial) {
        QPoly p = random_poly(rng, 3);
        for (unsigned m = 1; m <= 6; ++m)
            EXPECT_EQ(poly_binomial(p, m), poly_binomial(p - QPoly{1}, m) + poly_binomial(p - QPoly{1}, m - 1));
    }
}

TEST(QPolyProperty, RingAxiomsAndEvaluationHomomorphism) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        Rational r = random_rational(rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b).eval_at(r), a.eval_at(r) * b.eval_at(r));
        EXPECT_EQ((a + b).eval_at(r), a.eval_at(r) + b.eval_at(r));
        if (!b.is_zero()) {
            auto [quot, rem] = divmod(a, b);
            EXPECT_EQ(quot * b + rem, a);
            EXPECT_LT(rem.degree(), b.degree());
        }
        const QPoly sum = a * b + c;
        for (const auto& x : sum.coeffs()) {
            EXPECT_GT(x.get_den(), 0);
            EXPECT_EQ(Integer(gcd(x.get_num(), x.get_den())), 1);
        }
    }
}

TEST(QInvSeries, FromPolyOverPower) {
    // (q^6 - q^3 - q^2 + q)/6 over q^6.
    QPoly p = QPoly{0, 1, -1, -1, 0, 0, 1} * make_rational(1, 6);
    QInvSeries s = QInvSeries::from_poly_over_power(p, 6);
    EXPECT_EQ(s, (QInvSeries{make_rational(1, 6), 0, 0, make_rational(-1, 6), make_rational(-1, 6), make_rational(1, 6)}));
    EXPECT_EQ(s.eval_at(2), p.eval_at(2) / 64);
    EXPECT_THROW(QInvSeries::from_poly_over_power(p, 5), internal_error);
    EXPECT_EQ(to_display(QInvSeries{0, 2, 1}), "2u + u^2");
    EXPECT_EQ(to_display(QInvSeries{}), "0");
    EXPECT_EQ((QInvSeries{1, 1} + QInvSeries{0, -1}), QInvSeries{1});
}
