#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "weyl/error.hpp"

namespace weyl {

/// Exact rational scalar. mpq_class keeps values canonical (reduced,
/// positive denominator) through arithmetic; construction goes through
/// rational_make / rational_parse so the invariant holds everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_make(const Integer& num, const Integer& den) {
    if (den == 0) throw domain_error("zero_denominator", "rational with denominator 0");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_make(long num, long den = 1) {
    return rational_make(Integer(num), Integer(den));
}

/// Accepts "p", "-p", "p/q" with optional sign; no whitespace.
inline Rational rational_parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw domain_error("parse", "empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rational_make(Integer(s), Integer(1));
        return rational_make(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw domain_error("parse", "bad rational literal '" + s + "'");
    }
}

/// Canonical text: "p" when the denominator is 1, else "p/q".
inline std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool rational_is_integer(const Rational& r) { return r.get_den() == 1; }

/// Checked conversion for exponents and indices.
inline long rational_to_long(const Rational& r) {
    if (!rational_is_integer(r) || !r.get_num().fits_slong_p())
        throw domain_error("not_integer", "expected a small integer, got " + rational_str(r));
    return r.get_num().get_si();
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// Binomial coefficient with non-negative upper index.
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

/// Generalized binomial C(j, k) for any integer j (used by the descending
/// Leibniz rule, where j may be negative). Always an integer.
inline Integer binomial_signed(long j, unsigned long k) {
    if (j >= 0) {
        if (k > static_cast<unsigned long>(j)) return 0;
        return binomial(static_cast<unsigned long>(j), k);
    }
    // C(j,k) = (-1)^k C(k-j-1, k)
    Integer b = binomial(static_cast<unsigned long>(k - j - 1), k);
    return (k % 2 == 0) ? b : Integer(-b);
}

inline Rational rational_pow(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw domain_error("division_by_zero", "0 raised to a negative power");
        return 1 / rational_pow(r, -e);
    }
    Rational acc = 1, base = r;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace weyl
