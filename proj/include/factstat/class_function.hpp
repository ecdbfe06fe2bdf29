#pragma once

#include <factstat/lie_characters.hpp>
#include <factstat/measures.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace factstat {

/// Rational-valued function on the partitions of a fixed d.
class ClassFunction {
public:
    ClassFunction() = default;
    explicit ClassFunction(unsigned d) : d_(d) {
        for (auto& lambda : partitions_of(d)) values_.emplace(std::move(lambda), Rational(0));
    }
    ClassFunction(unsigned d, const std::function<Rational(const Partition&)>& f) : d_(d) {
        for (auto& lambda : partitions_of(d)) {
            Rational v = f(lambda);
            values_.emplace(std::move(lambda), std::move(v));
        }
    }

    unsigned degree() const { return d_; }
    const std::map<Partition, Rational>& values() const { return values_; }

    const Rational& operator()(const Partition& lambda) const {
        auto it = values_.find(lambda);
        if (it == values_.end()) throw std::out_of_range("partition " + to_string(lambda) + " outside class function domain");
        return it->second;
    }
    void set(const Partition& lambda, Rational v) {
        auto it = values_.find(lambda);
        if (it == values_.end()) throw std::out_of_range("partition " + to_string(lambda) + " outside class function domain");
        it->second = std::move(v);
    }

    ClassFunction& operator+=(const ClassFunction& o) {
        check_same_degree(o);
        for (auto& [lambda, v] : values_) v += o(lambda);
        return *this;
    }
    ClassFunction& operator-=(const ClassFunction& o) {
        check_same_degree(o);
        for (auto& [lambda, v] : values_) v -= o(lambda);
        return *this;
    }
    ClassFunction& operator*=(const Rational& c) {
        for (auto& [_, v] : values_) v *= c;
        return *this;
    }
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(const Rational& c, ClassFunction a) { return a *= c; }
    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

    void check_same_degree(const ClassFunction& o) const {
        if (o.d_ != d_)
            throw std::invalid_argument("class functions of degree " + std::to_string(d_) + " and " +
                                        std::to_string(o.d_) + " do not mix");
    }

private:
    unsigned d_ = 0;
    std::map<Partition, Rational> values_;
};

/// <P, R> = sum_l P(l) R(l) / z_l.
inline Rational inner(const ClassFunction& p, const ClassFunction& r) {
    p.check_same_degree(r);
    Rational sum = 0;
    for (const auto& [lambda, v] : p.values()) {
        if (v == 0) continue;
        sum += v * r(lambda) / Rational(lambda.z());
    }
    return sum;
}

/// Row k of a character family as a class function.
inline ClassFunction family_row(const CharacterFamily& fam, std::size_t k) {
    ClassFunction out(fam.d);
    if (k >= fam.degrees()) return out;
    for (std::size_t i = 0; i < fam.partitions.size(); ++i) out.set(fam.partitions[i], Rational(fam.values[k][i]));
    return out;
}

// ---------------------------------------------------------------------------
// Irreducible characters

/// Murnaghan-Nakayama evaluation of irreducible characters chi_mu(lambda).
///
/// mu is held as a beta-set (first-column hook lengths). Parts of lambda are
/// stripped largest first; each step removes every border strip of that
/// length from mu in increasing order of its starting bead, with sign
/// (-1)^(height) given by the beads jumped over. Results are memoized on
/// (mu, remaining parts of lambda).
class MurnaghanNakayama {
public:
    Integer operator()(const Partition& mu, const Partition& lambda) {
        if (mu.size() != lambda.size())
            throw std::invalid_argument("irreducible character " + to_string(mu) + " evaluated at " + to_string(lambda));
        return eval(mu, lambda.parts(), 0);
    }

private:
    Integer eval(const Partition& mu, const std::vector<unsigned>& parts, std::size_t from) {
        if (from == parts.size()) return mu.empty() ? 1 : 0;
        auto key = std::make_pair(mu, std::vector<unsigned>(parts.begin() + static_cast<long>(from), parts.end()));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const unsigned r = parts[from];
        const std::size_t len = mu.length();
        std::vector<unsigned> beta(len);
        for (std::size_t i = 0; i < len; ++i) beta[i] = mu.parts()[i] + static_cast<unsigned>(len - 1 - i);

        Integer total = 0;
        for (std::size_t i = len; i-- > 0;) {
            if (beta[i] < r) continue;
            const unsigned target = beta[i] - r;
            bool occupied = false;
            unsigned jumped = 0;
            for (unsigned b : beta) {
                if (b == target) occupied = true;
                if (b > target && b < beta[i]) ++jumped;
            }
            if (occupied) continue;
            std::vector<unsigned> moved = beta;
            moved[i] = target;
            std::sort(moved.begin(), moved.end(), std::greater<>());
            std::vector<unsigned> next;
            for (std::size_t j = 0; j < len; ++j) {
                unsigned part = moved[j] - static_cast<unsigned>(len - 1 - j);
                if (part > 0) next.push_back(part);
            }
            Integer sub = eval(Partition(std::move(next)), parts, from + 1);
            total += jumped % 2 == 0 ? sub : Integer(-sub);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::map<std::pair<Partition, std::vector<unsigned>>, Integer> memo_;
};

inline Integer mn_character(const Partition& mu, const Partition& lambda) {
    MurnaghanNakayama mn;
    return mn(mu, lambda);
}

/// f_mu = d! / prod(hook lengths).
inline Integer hook_dim(const Partition& mu) {
    const Partition conj = mu.conjugate();
    Integer hooks = 1;
    for (std::size_t i = 0; i < mu.length(); ++i)
        for (unsigned j = 0; j < mu.parts()[i]; ++j)
            hooks *= (mu.parts()[i] - j - 1) + (conj.parts()[j] - static_cast<unsigned>(i) - 1) + 1;
    return factorial(mu.size()) / hooks;
}

/// Irreducible characters of S_d, rows indexed by mu, in reverse-lexicographic order.
struct CharacterTable {
    unsigned d = 0;
    std::vector<Partition> partitions;
    std::vector<ClassFunction> irreducibles;

    const ClassFunction& irreducible(const Partition& mu) const {
        for (std::size_t i = 0; i < partitions.size(); ++i)
            if (partitions[i] == mu) return irreducibles[i];
        throw std::out_of_range("no irreducible " + to_string(mu) + " in degree " + std::to_string(d));
    }
};

inline CharacterTable character_table(unsigned d) {
    CharacterTable table{d, partitions_of(d), {}};
    MurnaghanNakayama mn;
    for (const auto& mu : table.partitions)
        table.irreducibles.emplace_back(d, [&](const Partition& lambda) { return Rational(mn(mu, lambda)); });
    return table;
}

/// Multiplicities a_mu = <P, chi_mu>.
inline std::map<Partition, Rational> decompose(const ClassFunction& p, const CharacterTable& table) {
    if (table.d != p.degree()) throw std::invalid_argument("character table degree mismatch");
    std::map<Partition, Rational> out;
    for (std::size_t i = 0; i < table.partitions.size(); ++i) out.emplace(table.partitions[i], inner(p, table.irreducibles[i]));
    return out;
}

inline std::map<Partition, Rational> decompose(const ClassFunction& p) { return decompose(p, character_table(p.degree())); }

inline ClassFunction reconstruct(const std::map<Partition, Rational>& multiplicities, const CharacterTable& table) {
    ClassFunction out(table.d);
    for (const auto& [mu, a] : multiplicities)
        if (a != 0) out += a * table.irreducible(mu);
    return out;
}

/// True when every multiplicity is a nonnegative integer, i.e. P is the
/// character of a genuine representation.
inline bool is_character(const std::map<Partition, Rational>& multiplicities) {
    for (const auto& [_, a] : multiplicities)
        if (!is_integer(a) || a < 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Expected values

/// E_d(P) = sum_k <P, psi_d^k> q^{-k}.
inline QInvSeries expected_value(const ClassFunction& p, const CharacterFamily& psi_family) {
    if (psi_family.kind != CharacterKind::psi) throw std::invalid_argument("expected_value needs the psi family");
    if (psi_family.d != p.degree()) throw std::invalid_argument("statistic degree does not match character family");
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < psi_family.degrees(); ++k) coeffs.push_back(inner(p, family_row(psi_family, k)));
    return QInvSeries(std::move(coeffs));
}

inline QInvSeries expected_value(const ClassFunction& p) {
    return expected_value(p, compute_character_family(p.degree(), CharacterKind::psi));
}

/// E_d^sf(P) = sum_k (-1)^k <P, chi_d^k> q^{-k}, d >= 2.
inline QInvSeries expected_value_sf(const ClassFunction& p, const CharacterFamily& chi_family) {
    if (p.degree() < 2) throw std::invalid_argument("squarefree expected value needs d >= 2");
    if (chi_family.kind != CharacterKind::chi) throw std::invalid_argument("expected_value_sf needs the chi family");
    if (chi_family.d != p.degree()) throw std::invalid_argument("statistic degree does not match character family");
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < chi_family.degrees(); ++k) {
        Rational c = inner(p, family_row(chi_family, k));
        coeffs.push_back(k % 2 == 0 ? c : Rational(-c));
    }
    return QInvSeries(std::move(coeffs));
}

inline QInvSeries expected_value_sf(const ClassFunction& p) {
    if (p.degree() < 2) throw std::invalid_argument("squarefree expected value needs d >= 2");
    return expected_value_sf(p, compute_character_family(p.degree(), CharacterKind::chi));
}

/// sum_l P(l) nu(l): the same expectation computed from the splitting measure.
inline QInvSeries expected_value_from_measure(const ClassFunction& p, const MeasureTable& table) {
    if (table.d != p.degree()) throw std::invalid_argument("statistic degree does not match measure table");
    QInvSeries out;
    for (const auto& [lambda, nu] : table.entries) out += p(lambda) * nu;
    return out;
}

// ---------------------------------------------------------------------------
// Built-in statistics

inline ClassFunction trivial_function(unsigned d) {
    return ClassFunction(d, [](const Partition&) { return Rational(1); });
}

inline ClassFunction sign_function(unsigned d) {
    return ClassFunction(d, [](const Partition& l) { return Rational(l.sign()); });
}

/// x_k: number of parts of size k.
inline ClassFunction part_count_function(unsigned d, unsigned k) {
    return ClassFunction(d, [k](const Partition& l) { return Rational(l.multiplicity(k)); });
}

/// binom(x_1, 2) - x_2: reducible minus irreducible quadratic factors.
inline ClassFunction quad_excess_function(unsigned d) {
    return ClassFunction(d, [](const Partition& l) {
        const long m1 = l.multiplicity(1);
        return Rational(m1 * (m1 - 1) / 2 - static_cast<long>(l.multiplicity(2)));
    });
}

inline ClassFunction even_type_function(unsigned d) {
    return ClassFunction(d, [](const Partition& l) { return Rational(l.sign() == 1 ? 1 : 0); });
}

}  // namespace factstat
