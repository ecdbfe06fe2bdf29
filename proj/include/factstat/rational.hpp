#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace factstat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an exactness or consistency assertion fails inside a computation.
/// A nonzero remainder where the math promises an exact quotient lands here.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a request exceeds a configured enumeration or degree bound.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Integer value of `r`; throws internal_error if `r` has a denominator.
inline Integer to_integer(const Rational& r, std::string_view what = "value") {
    if (!is_integer(r))
        throw internal_error(std::string(what) + " is not an integer: " + r.get_str());
    return r.get_num();
}

/// "num/den", denominator omitted when 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(std::string_view text) {
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("malformed rational: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("malformed rational: " + std::string(text));
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace factstat
