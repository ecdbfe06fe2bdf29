#pragma once

#include <factstat/partition.hpp>
#include <factstat/qpoly.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace factstat {

/// Moebius function by trial division.
inline int mobius(unsigned n) {
    if (n == 0) throw std::invalid_argument("mobius(0)");
    int sign = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

/// M_j(q) = (1/j) sum_{i | j} mu(i) q^{j/i}: the number of monic irreducible
/// polynomials of degree j over F_q.
inline QPoly necklace(unsigned j) {
    if (j == 0) throw std::invalid_argument("necklace polynomial needs j >= 1");
    QPoly out;
    for (unsigned i = 1; i <= j; ++i) {
        if (j % i != 0) continue;
        if (int mu = mobius(i); mu != 0) out += QPoly::monomial(j / i, mu);
    }
    return out * Rational(1, j);
}

/// Number of monic degree-d polynomials of factorization type lambda, as a polynomial in q.
inline QPoly count_all(const Partition& lambda) {
    QPoly out = QPoly::constant(1);
    for (auto [j, m] : lambda.multiplicities()) out *= poly_multichoose(necklace(j), m);
    return out;
}

/// Number of squarefree monic degree-d polynomials of factorization type lambda.
inline QPoly count_sf(const Partition& lambda) {
    QPoly out = QPoly::constant(1);
    for (auto [j, m] : lambda.multiplicities()) out *= poly_binomial(necklace(j), m);
    return out;
}

/// nu(lambda) = count_all(lambda) / q^d.
inline QInvSeries splitting_measure(const Partition& lambda) {
    return QInvSeries::from_poly_over_power(count_all(lambda), lambda.size());
}

/// nu^sf(lambda) = count_sf(lambda) / (q^d - q^{d-1}), defined for d >= 2.
inline QInvSeries sf_splitting_measure(const Partition& lambda) {
    const unsigned d = lambda.size();
    if (d < 2) throw std::invalid_argument("squarefree splitting measure needs d >= 2");
    // count_sf / (q - 1) is exact, of degree <= d - 1, with zero constant term.
    QPoly reduced = exact_divide(count_sf(lambda), QPoly{-1, 1});
    if (reduced.degree() > static_cast<long>(d) - 1 || reduced.coeff(0) != 0)
        throw internal_error("squarefree measure of " + to_string(lambda) + " has too many terms");
    return QInvSeries::from_poly_over_power(reduced, d - 1);
}

enum class Flavor { all, squarefree };

inline std::string_view to_string(Flavor f) { return f == Flavor::all ? "all" : "squarefree"; }

/// Splitting measure over every partition of d, keyed by partition.
struct MeasureTable {
    unsigned d = 0;
    Flavor flavor = Flavor::all;
    std::map<Partition, QInvSeries> entries;

    QInvSeries total() const {
        QInvSeries s;
        for (const auto& [_, e] : entries) s += e;
        return s;
    }
};

inline MeasureTable measure_table(unsigned d, Flavor flavor) {
    if (d < 1) throw std::invalid_argument("measure table needs d >= 1");
    MeasureTable table{d, flavor, {}};
    for (const auto& lambda : partitions_of(d))
        table.entries.emplace(lambda, flavor == Flavor::all ? splitting_measure(lambda) : sf_splitting_measure(lambda));
    if (table.total() != QInvSeries{1})
        throw internal_error("measure table for d = " + std::to_string(d) + " does not sum to 1");
    return table;
}

}  // namespace factstat
