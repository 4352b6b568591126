#include "weyl/param_poly.hpp"

#include <sstream>

namespace weyl {

Rational ParamPoly::as_rational() const {
    if (!is_rational())
        throw domain_error("not_rational", "polynomial of degree " + std::to_string(degree()) +
                                               " used where a scalar is required");
    return c_.empty() ? Rational(0) : c_[0];
}

Rational ParamPoly::eval(const Rational& at) const {
    Rational v = 0;
    for (size_t k = c_.size(); k-- > 0;) v = v * at + c_[k];
    return v;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

ParamPoly operator*(const ParamPoly& l, const ParamPoly& r) {
    if (l.is_zero() || r.is_zero()) return ParamPoly();
    std::vector<Rational> out(l.c_.size() + r.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < l.c_.size(); ++i) {
        if (l.c_[i] == 0) continue;
        for (size_t j = 0; j < r.c_.size(); ++j) out[i + j] += l.c_[i] * r.c_[j];
    }
    return ParamPoly(std::move(out));
}

std::pair<ParamPoly, ParamPoly> ParamPoly::divmod(const ParamPoly& d) const {
    if (d.is_zero()) throw domain_error("division_by_zero", "polynomial division by zero");
    ParamPoly rem = *this;
    if (rem.degree() < d.degree()) return {ParamPoly(), rem};
    std::vector<Rational> q(rem.degree() - d.degree() + 1, Rational(0));
    const Rational dl = d.lc();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        long shift = rem.degree() - d.degree();
        Rational f = rem.lc() / dl;
        q[shift] = f;
        // rem -= f * a^shift * d
        std::vector<Rational> sub(shift + d.c_.size(), Rational(0));
        for (size_t k = 0; k < d.c_.size(); ++k) sub[shift + k] = f * d.c_[k];
        rem -= ParamPoly(std::move(sub));
    }
    return {ParamPoly(std::move(q)), rem};
}

ParamPoly ParamPoly::divexact(const ParamPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero())
        throw domain_error("inexact_division", "polynomial division left remainder " + r.str());
    return q;
}

ParamPoly ParamPoly::gcd(ParamPoly a, ParamPoly b) {
    while (!b.is_zero()) {
        ParamPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational l = a.lc();
    for (auto& c : a.c_) c /= l;
    return a;
}

ParamPoly ParamPoly::pow(unsigned long e) const {
    ParamPoly acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string ParamPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (k == 0) {
            os << rational_str(mag);
        } else {
            if (!unit) os << rational_str(mag) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace weyl
