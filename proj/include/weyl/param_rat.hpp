#pragma once

#include "weyl/param_poly.hpp"

namespace weyl {

/// Fraction of ParamPolys, kept reduced with a monic denominator.
/// Used only where the field of fractions is genuinely needed (linear
/// algebra); everything else stays in the polynomial ring.
class ParamRat {
public:
    ParamRat() : num_(), den_(1) {}
    ParamRat(const ParamPoly& p) : num_(p), den_(1) {}
    ParamRat(const Rational& r) : num_(r), den_(1) {}
    ParamRat(long v) : num_(v), den_(1) {}
    ParamRat(ParamPoly num, ParamPoly den);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// Denominator is 1 (always true after reduction when num is polynomial).
    bool is_polynomial() const { return den_.is_one(); }

    ParamRat inv() const;
    ParamRat operator-() const;
    friend ParamRat operator+(const ParamRat& l, const ParamRat& r);
    friend ParamRat operator-(const ParamRat& l, const ParamRat& r);
    friend ParamRat operator*(const ParamRat& l, const ParamRat& r);
    friend ParamRat operator/(const ParamRat& l, const ParamRat& r);
    ParamRat& operator+=(const ParamRat& o) { return *this = *this + o; }
    ParamRat& operator-=(const ParamRat& o) { return *this = *this - o; }
    ParamRat& operator*=(const ParamRat& o) { return *this = *this * o; }
    ParamRat& operator/=(const ParamRat& o) { return *this = *this / o; }

    bool operator==(const ParamRat& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str(const std::string& var = "a") const;

private:
    void reduce();

    ParamPoly num_, den_;
};

} // namespace weyl
