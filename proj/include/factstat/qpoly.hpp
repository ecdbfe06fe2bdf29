#pragma once

#include <factstat/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace factstat {

/// Dense univariate polynomial in q with exact rational coefficients.
/// coeffs()[i] is the coefficient of q^i; trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }
    /// The monomial c·q^n.
    static QPoly monomial(std::size_t n, const Rational& c = 1) {
        std::vector<Rational> v(n + 1);
        v[n] = c;
        return QPoly(std::move(v));
    }
    static QPoly q() { return monomial(1); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational eval_at(const Rational& r) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
        return acc;
    }

    QPoly& operator+=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    QPoly& operator*=(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(QPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return QPoly(std::move(out));
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Quotient and remainder of long division by a nonzero divisor.
    friend std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den) {
        if (den.is_zero()) throw std::domain_error("polynomial division by zero");
        if (num.degree() < den.degree()) return {QPoly{}, num};
        std::vector<Rational> rem = num.coeffs_;
        std::vector<Rational> quot(num.coeffs_.size() - den.coeffs_.size() + 1);
        const Rational& lead = den.coeffs_.back();
        for (std::size_t i = quot.size(); i-- > 0;) {
            Rational c = rem[i + den.coeffs_.size() - 1] / lead;
            quot[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < den.coeffs_.size(); ++j) rem[i + j] -= c * den.coeffs_[j];
        }
        return {QPoly(std::move(quot)), QPoly(std::move(rem))};
    }

    /// Quotient of a division that must be exact; a remainder is an internal error.
    friend QPoly exact_divide(const QPoly& num, const QPoly& den) {
        auto [quot, rem] = divmod(num, den);
        if (!rem.is_zero()) throw internal_error("inexact polynomial division");
        return quot;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// p(p+1)...(p+m-1)/m!, the number of size-m multisets drawn from a p-element set.
inline QPoly poly_multichoose(const QPoly& p, unsigned m) {
    QPoly out = QPoly::constant(1);
    for (unsigned i = 0; i < m; ++i) out *= p + QPoly::constant(i);
    return out * Rational(Integer(1), factorial(m));
}

/// p(p-1)...(p-m+1)/m!.
inline QPoly poly_binomial(const QPoly& p, unsigned m) {
    QPoly out = QPoly::constant(1);
    for (unsigned i = 0; i < m; ++i) out *= p - QPoly::constant(i);
    return out * Rational(Integer(1), factorial(m));
}

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational& c = p.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) os << (a != 1 ? "*q" : "q");
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os;
}

/// Finite expansion sum_k c_k q^{-k}. Kept distinct from QPoly so the two
/// gradings never mix silently.
class QInvSeries {
public:
    QInvSeries() = default;
    QInvSeries(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit QInvSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// p / q^n re-expressed in powers of 1/q. Requires deg p <= n.
    static QInvSeries from_poly_over_power(const QPoly& p, std::size_t n) {
        if (p.degree() > static_cast<long>(n))
            throw internal_error("polynomial of degree " + std::to_string(p.degree()) +
                                 " is not a series in 1/q after dividing by q^" + std::to_string(n));
        std::vector<Rational> out(n + 1);
        for (std::size_t k = 0; k <= n; ++k) out[k] = p.coeff(n - k);
        return QInvSeries(std::move(out));
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    /// Value at q = r (r nonzero), exact.
    Rational eval_at(const Rational& r) const {
        if (r == 0) throw std::domain_error("series in 1/q evaluated at q = 0");
        Rational inv = 1 / r;
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inv + *it;
        return acc;
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    Rational coefficient_sum() const {
        Rational s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    QInvSeries& operator+=(const QInvSeries& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    QInvSeries& operator*=(const Rational& c) {
        if (c == 0) coeffs_.clear();
        for (auto& a : coeffs_) a *= c;
        return *this;
    }
    friend QInvSeries operator+(QInvSeries a, const QInvSeries& b) { return a += b; }
    friend QInvSeries operator*(QInvSeries a, const Rational& c) { return a *= c; }
    friend QInvSeries operator*(const Rational& c, QInvSeries a) { return a *= c; }
    friend bool operator==(const QInvSeries&, const QInvSeries&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Human-readable form in u = 1/q, e.g. "2u + u^2".
inline std::string to_display(const QInvSeries& s, std::string_view var = "u") {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const Rational& c = s.coeffs()[k];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Rational a = abs(c);
        if (k == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str();
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const QInvSeries& s) { return os << to_display(s); }

}  // namespace factstat
