#pragma once

#include <string>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Dense univariate polynomial over Rational in the central parameter `a`.
/// Invariant: the coefficient vector has no trailing zeros (the zero
/// polynomial is the empty vector). Degree of 0 is -1 by convention.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& c) { c_.push_back(c); trim(); }
    ParamPoly(long c) : ParamPoly(Rational(c)) {}
    explicit ParamPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The parameter itself.
    static ParamPoly variable() { return ParamPoly(std::vector<Rational>{0, 1}); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// Degree 0 or the zero polynomial: the scalar case.
    bool is_rational() const { return c_.size() <= 1; }

    long degree() const { return static_cast<long>(c_.size()) - 1; }

    /// Coefficient of a^k (0 beyond the stored range).
    const Rational& coeff(size_t k) const {
        static const Rational kZero = 0;
        return k < c_.size() ? c_[k] : kZero;
    }

    /// Leading coefficient; 0 for the zero polynomial.
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

    /// Value as a Rational; error unless degree <= 0.
    Rational as_rational() const;

    Rational eval(const Rational& at) const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly l, const ParamPoly& r) { return l += r; }
    friend ParamPoly operator-(ParamPoly l, const ParamPoly& r) { return l -= r; }
    friend ParamPoly operator*(const ParamPoly& l, const ParamPoly& r);
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    bool operator==(const ParamPoly& o) const { return c_ == o.c_; }

    /// Exact division; throws "inexact_division" when the remainder is nonzero.
    ParamPoly divexact(const ParamPoly& d) const;

    /// Quotient/remainder long division (d != 0).
    std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& d) const;

    /// Monic gcd (gcd(0,0) = 0).
    static ParamPoly gcd(ParamPoly a, ParamPoly b);

    ParamPoly pow(unsigned long e) const;

    /// Canonical text, terms in descending degree: "2*a^3 - a + 1/2".
    std::string str(const std::string& var = "a") const;

    const std::vector<Rational>& coeffs() const { return c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace weyl
