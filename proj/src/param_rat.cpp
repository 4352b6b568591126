#include "weyl/param_rat.hpp"

namespace weyl {

ParamRat::ParamRat(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw domain_error("division_by_zero", "zero denominator");
    reduce();
}

void ParamRat::reduce() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    ParamPoly g = ParamPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    // monic denominator fixes the representative
    Rational l = den_.lc();
    if (l != 1) {
        num_ = num_ * ParamPoly(Rational(1) / l);
        den_ = den_ * ParamPoly(Rational(1) / l);
    }
}

ParamRat ParamRat::inv() const {
    if (is_zero()) throw domain_error("division_by_zero", "inverse of zero");
    return ParamRat(den_, num_);
}

ParamRat ParamRat::operator-() const {
    ParamRat r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamRat operator+(const ParamRat& l, const ParamRat& r) {
    return ParamRat(l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_);
}

ParamRat operator-(const ParamRat& l, const ParamRat& r) {
    return ParamRat(l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_);
}

ParamRat operator*(const ParamRat& l, const ParamRat& r) {
    return ParamRat(l.num_ * r.num_, l.den_ * r.den_);
}

ParamRat operator/(const ParamRat& l, const ParamRat& r) {
    if (r.is_zero()) throw domain_error("division_by_zero", "division by zero");
    return ParamRat(l.num_ * r.den_, l.den_ * r.num_);
}

std::string ParamRat::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace weyl
