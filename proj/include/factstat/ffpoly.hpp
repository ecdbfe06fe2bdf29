#pragma once

#include <factstat/measures.hpp>
#include <factstat/stat_expr.hpp>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace factstat {

inline constexpr std::uint64_t kDefaultFieldBound = 1u << 16;
inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

/// q = p^n with p prime, or nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned n = 0;
    while (q % p == 0) {
        q /= p;
        ++n;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), n);
}

/// Saturating q^e.
inline std::uint64_t checked_pow(std::uint64_t q, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (out > UINT64_MAX / q) return UINT64_MAX;
        out *= q;
    }
    return out;
}

/// Coefficient vector over F_q, lowest degree first. Oracle polynomials are monic.
using FqCoeffs = std::vector<std::uint32_t>;

/// F_q for q = p^n. Elements are the integers 0..q-1; element e stands for
/// sum_i e_i t^i where e_i are the base-p digits of e, reduced modulo the
/// field's defining polynomial. For n = 1 this is plain arithmetic mod p.
class FiniteField {
public:
    /// The defining polynomial is the least monic irreducible of degree n when
    /// coefficient tuples (c_{n-1}, ..., c_0) are compared most significant first.
    FiniteField(std::uint32_t p, unsigned n, std::uint64_t bound = kDefaultFieldBound) : p_(p), n_(n) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
        const std::uint64_t q = checked_pow(p, n);
        if (q > bound) throw resource_error("field size " + std::to_string(p) + "^" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
        q_ = static_cast<std::uint32_t>(q);
        if (n > 1) modulus_ = least_irreducible_mod_p(p, n);
        if (q_ <= kTableLimit) build_tables();
    }

    std::uint32_t p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint32_t q() const { return q_; }
    /// Monic defining polynomial over F_p, lowest degree first; empty for prime fields.
    const FqCoeffs& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (!add_.empty()) return add_[a * q_ + b];
        return slow_add(a, b);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        if (!sub_.empty()) return sub_[a * q_ + b];
        return slow_add(a, slow_neg(b));
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!mul_.empty()) return mul_[a * q_ + b];
        return slow_mul(a, b);
    }

    /// Irreducibility over F_p by trial division against every monic polynomial
    /// of degree 1..deg/2.
    static bool is_irreducible_mod_p(const FqCoeffs& f, std::uint32_t p) {
        const unsigned deg = static_cast<unsigned>(f.size()) - 1;
        for (unsigned e = 1; 2 * e <= deg; ++e) {
            const std::uint64_t count = checked_pow(p, e);
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                FqCoeffs g(e + 1);
                std::uint64_t rest = idx;
                for (unsigned i = 0; i < e; ++i) {
                    g[i] = static_cast<std::uint32_t>(rest % p);
                    rest /= p;
                }
                g[e] = 1;
                if (mod_p_remainder_is_zero(f, g, p)) return false;
            }
        }
        return true;
    }

private:
    static constexpr std::uint32_t kTableLimit = 1024;

    static bool mod_p_remainder_is_zero(FqCoeffs f, const FqCoeffs& g, std::uint32_t p) {
        const std::size_t e = g.size() - 1;
        for (std::size_t i = f.size() - 1; i >= e; --i) {
            const std::uint64_t c = f[i];
            if (c != 0)
                for (std::size_t j = 0; j <= e; ++j) f[i - e + j] = static_cast<std::uint32_t>((f[i - e + j] + (p - c) * g[j]) % p);
            if (i == 0) break;
        }
        return std::all_of(f.begin(), f.begin() + static_cast<long>(e), [](std::uint32_t c) { return c == 0; });
    }

    static FqCoeffs least_irreducible_mod_p(std::uint32_t p, unsigned n) {
        const std::uint64_t count = checked_pow(p, n);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            FqCoeffs f(n + 1);
            std::uint64_t rest = idx;
            // The lowest digit of idx is the constant term, so increasing idx
            // walks tuples (c_{n-1}, ..., c_0) in lexicographic order.
            for (unsigned i = 0; i < n; ++i) {
                f[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            f[n] = 1;
            if (is_irreducible_mod_p(f, p)) return f;
        }
        throw internal_error("no irreducible polynomial of degree " + std::to_string(n) + " mod " + std::to_string(p));
    }

    FqCoeffs digits(std::uint32_t a) const {
        FqCoeffs out(n_);
        for (unsigned i = 0; i < n_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
        return out;
    }
    std::uint32_t from_digits(const FqCoeffs& d) const {
        std::uint32_t out = 0;
        for (unsigned i = n_; i-- > 0;) out = out * p_ + d[i];
        return out;
    }
    std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const {
        if (n_ == 1) return (a + b) % p_;
        FqCoeffs x = digits(a), y = digits(b);
        for (unsigned i = 0; i < n_; ++i) x[i] = (x[i] + y[i]) % p_;
        return from_digits(x);
    }
    std::uint32_t slow_neg(std::uint32_t a) const {
        if (n_ == 1) return (p_ - a) % p_;
        FqCoeffs x = digits(a);
        for (auto& c : x) c = (p_ - c) % p_;
        return from_digits(x);
    }
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        if (n_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
        FqCoeffs x = digits(a), y = digits(b);
        std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_;
        for (std::size_t i = prod.size(); i-- > n_;) {
            const std::uint64_t c = prod[i];
            if (c == 0) continue;
            for (unsigned j = 0; j <= n_; ++j) prod[i - n_ + j] = (prod[i - n_ + j] + (p_ - c) * modulus_[j]) % p_;
        }
        FqCoeffs out(n_);
        for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return from_digits(out);
    }

    void build_tables() {
        const std::size_t sz = static_cast<std::size_t>(q_) * q_;
        std::vector<std::uint32_t> add(sz), sub(sz), mul(sz);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                add[a * q_ + b] = slow_add(a, b);
                sub[a * q_ + b] = slow_add(a, slow_neg(b));
                mul[a * q_ + b] = slow_mul(a, b);
            }
        add_ = std::move(add);
        sub_ = std::move(sub);
        mul_ = std::move(mul);
    }

    std::uint32_t p_;
    unsigned n_;
    std::uint32_t q_ = 0;
    FqCoeffs modulus_;
    std::vector<std::uint32_t> add_, sub_, mul_;
};

inline FiniteField build_field(std::uint32_t p, unsigned n, std::uint64_t bound = kDefaultFieldBound) {
    return FiniteField(p, n, bound);
}

inline FiniteField field_of_order(std::uint64_t q, std::uint64_t bound = kDefaultFieldBound) {
    auto pn = prime_power(q);
    if (!pn) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return FiniteField(pn->first, pn->second, bound);
}

/// Monic polynomial over F_q.
struct FqPoly {
    FqCoeffs coeffs;  // lowest degree first, coeffs.back() == 1

    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }

    /// Monic degree-d polynomial whose lower coefficients are the base-q digits
    /// of idx, constant term least significant.
    static FqPoly from_index(std::uint32_t q, unsigned d, std::uint64_t idx) {
        FqPoly f{FqCoeffs(d + 1)};
        for (unsigned i = 0; i < d; ++i) {
            f.coeffs[i] = static_cast<std::uint32_t>(idx % q);
            idx /= q;
        }
        f.coeffs[d] = 1;
        return f;
    }
    std::uint64_t index(std::uint32_t q) const {
        std::uint64_t out = 0;
        for (unsigned i = degree(); i-- > 0;) out = out * q + coeffs[i];
        return out;
    }

    friend bool operator==(const FqPoly&, const FqPoly&) = default;
};

inline FqPoly multiply(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
    FqCoeffs out(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
    return {std::move(out)};
}

/// If monic g divides f, replaces f by f / g and returns true; otherwise f is unchanged.
inline bool divide_if_divisible(const FiniteField& F, FqCoeffs& f, const FqCoeffs& g, FqCoeffs& scratch) {
    const std::size_t e = g.size() - 1;
    if (f.size() < g.size()) return false;
    scratch = f;
    FqCoeffs quot(f.size() - e);
    for (std::size_t i = scratch.size() - 1;; --i) {
        const std::uint32_t c = scratch[i];
        quot[i - e] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= e; ++j) scratch[i - e + j] = F.sub(scratch[i - e + j], F.mul(c, g[j]));
        if (i == e) break;
    }
    for (std::size_t i = 0; i < e; ++i)
        if (scratch[i] != 0) return false;
    f = std::move(quot);
    return true;
}

/// Monic irreducibles over F_q grouped by degree, each list in increasing
/// polynomial index order.
struct IrreducibleTable {
    std::uint32_t q = 0;
    /// by_degree[j] lists the degree-j irreducibles; by_degree[0] is empty.
    std::vector<std::vector<FqPoly>> by_degree;
    /// Sorted indices per degree, for membership checks.
    std::vector<std::vector<std::uint64_t>> indices;

    unsigned max_degree() const { return static_cast<unsigned>(by_degree.size()) - 1; }
    bool contains(const FqPoly& f) const {
        const unsigned d = f.degree();
        if (d == 0 || d > max_degree()) return false;
        return std::binary_search(indices[d].begin(), indices[d].end(), f.index(q));
    }
};

/// Sieve for monic irreducibles of degree 1..max_degree: a monic polynomial is
/// irreducible iff no irreducible of degree <= deg/2 divides it. Each degree's
/// count is checked against M_j(q); a mismatch is an internal error.
inline IrreducibleTable irreducibles_by_degree(const FiniteField& F, unsigned max_degree,
                                               std::uint64_t bound = kDefaultEnumerationBound) {
    const std::uint32_t q = F.q();
    std::uint64_t work = 0;
    for (unsigned j = 1; j <= max_degree; ++j) {
        const std::uint64_t c = checked_pow(q, j);
        work = c > UINT64_MAX - work ? UINT64_MAX : work + c;
    }
    if (work > bound)
        throw resource_error("sieve over F_" + std::to_string(q) + " up to degree " + std::to_string(max_degree) +
                             " exceeds enumeration bound " + std::to_string(bound));
    IrreducibleTable table{q, std::vector<std::vector<FqPoly>>(max_degree + 1),
                           std::vector<std::vector<std::uint64_t>>(max_degree + 1)};
    FqCoeffs scratch;
    for (unsigned j = 1; j <= max_degree; ++j) {
        const std::uint64_t count = checked_pow(q, j);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            FqPoly f = FqPoly::from_index(q, j, idx);
            bool irreducible = true;
            for (unsigned e = 1; 2 * e <= j && irreducible; ++e) {
                for (const auto& g : table.by_degree[e]) {
                    FqCoeffs work_copy = f.coeffs;
                    if (divide_if_divisible(F, work_copy, g.coeffs, scratch)) {
                        irreducible = false;
                        break;
                    }
                }
            }
            if (irreducible) {
                table.by_degree[j].push_back(std::move(f));
                table.indices[j].push_back(idx);
            }
        }
        const Rational expected = necklace(j).eval_at(Rational(q));
        if (Rational(static_cast<unsigned long>(table.by_degree[j].size())) != expected)
            throw internal_error("sieve found " + std::to_string(table.by_degree[j].size()) + " irreducibles of degree " +
                                 std::to_string(j) + " over F_" + std::to_string(q) + ", expected " + expected.get_str());
    }
    return table;
}

struct Factorization {
    Partition type;
    bool squarefree = true;
    /// Irreducible factors with multiplicity, in the order found.
    std::vector<FqPoly> factors;
};

/// Factors f by trial division: irreducibles in increasing degree, then
/// increasing index, each divided out as often as it goes. Once deg(g) exceeds
/// half the remaining degree, the remainder is itself irreducible and must be
/// in the table. The product of the factors is checked against f.
inline Factorization factorize(const FiniteField& F, const FqPoly& f, const IrreducibleTable& table) {
    if (table.q != F.q()) throw std::invalid_argument("irreducible table belongs to a different field");
    if (f.degree() > table.max_degree())
        throw std::invalid_argument("irreducible table covers degree " + std::to_string(table.max_degree()) +
                                    " but polynomial has degree " + std::to_string(f.degree()));
    Factorization out;
    std::vector<unsigned> degrees;
    FqCoeffs rest = f.coeffs;
    FqCoeffs scratch;
    for (unsigned e = 1; 2 * e <= rest.size() - 1; ++e) {
        for (const auto& g : table.by_degree[e]) {
            unsigned times = 0;
            while (rest.size() - 1 >= e && divide_if_divisible(F, rest, g.coeffs, scratch)) {
                ++times;
                degrees.push_back(e);
                out.factors.push_back(g);
            }
            if (times > 1) out.squarefree = false;
            if (2 * e > rest.size() - 1) break;
        }
    }
    if (rest.size() > 1) {
        FqPoly last{rest};
        if (!table.contains(last)) throw internal_error("trial division left a reducible cofactor");
        degrees.push_back(last.degree());
        out.factors.push_back(std::move(last));
    }
    FqPoly product{{1}};
    for (const auto& g : out.factors) product = multiply(F, product, g);
    if (!(product == f)) throw internal_error("factors do not reconstruct the polynomial");
    out.type = Partition(std::move(degrees));
    return out;
}

inline Partition factorization_type(const FiniteField& F, const FqPoly& f, const IrreducibleTable& table) {
    return factorize(F, f, table).type;
}

/// Exhaustive count of monic degree-d polynomials by factorization type.
struct Census {
    std::uint32_t q = 0;
    unsigned d = 0;
    Flavor flavor = Flavor::all;
    /// Every partition of d, including those with zero count.
    std::map<Partition, std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [_, c] : counts) t += c;
        return t;
    }
};

/// Enumerates all q^d monic polynomials of degree d (d >= 1), split into
/// `shards` contiguous index ranges processed in parallel. The merged
/// counts do not depend on the shard count.
inline Census census(const FiniteField& F, unsigned d, Flavor flavor, unsigned shards = 1,
                     std::uint64_t bound = kDefaultEnumerationBound, const IrreducibleTable* table = nullptr) {
    if (d < 1) throw std::invalid_argument("census needs d >= 1");
    const std::uint32_t q = F.q();
    const std::uint64_t total = checked_pow(q, d);
    if (total > bound)
        throw resource_error("census of " + std::to_string(q) + "^" + std::to_string(d) + " polynomials exceeds bound " +
                             std::to_string(bound));
    IrreducibleTable owned;
    if (table == nullptr || table->max_degree() < d) {
        owned = irreducibles_by_degree(F, d, bound * 2);
        table = &owned;
    }

    const auto parts = partitions_of(d);
    std::map<Partition, std::size_t> slot;
    for (std::size_t i = 0; i < parts.size(); ++i) slot.emplace(parts[i], i);

    shards = std::max(1u, std::min<unsigned>(shards, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
    std::vector<std::vector<std::uint64_t>> local(shards, std::vector<std::uint64_t>(parts.size(), 0));
    std::vector<std::exception_ptr> errors(shards);
    auto run = [&](unsigned s) {
        try {
            const std::uint64_t begin = total * s / shards, end = total * (s + 1) / shards;
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                Factorization fac = factorize(F, FqPoly::from_index(q, d, idx), *table);
                if (flavor == Flavor::squarefree && !fac.squarefree) continue;
                ++local[s][slot.at(fac.type)];
            }
        } catch (...) {
            errors[s] = std::current_exception();
        }
    };
    if (shards == 1) {
        run(0);
    } else {
        std::vector<std::thread> workers;
        for (unsigned s = 0; s < shards; ++s) workers.emplace_back(run, s);
        for (auto& w : workers) w.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Census out{q, d, flavor, {}};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::uint64_t c = 0;
        for (const auto& l : local) c += l[i];
        out.counts.emplace(parts[i], c);
    }
    return out;
}

/// sum_l P(l) count(l) / total, exact.
inline Rational empirical_expectation(const ClassFunction& p, const Census& c) {
    if (p.degree() != c.d) throw std::invalid_argument("statistic degree does not match census");
    const std::uint64_t total = c.total();
    if (total == 0) throw std::invalid_argument("empty census");
    Rational sum = 0;
    for (const auto& [lambda, n] : c.counts) sum += p(lambda) * Rational(Integer(static_cast<unsigned long>(n)));
    return sum / Rational(Integer(static_cast<unsigned long>(total)));
}

inline Rational empirical_expectation(const Statistic& stat, const FiniteField& F, unsigned d, Flavor flavor,
                                      unsigned shards = 1) {
    return empirical_expectation(stat(d), census(F, d, flavor, shards));
}

}  // namespace factstat
