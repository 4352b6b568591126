#include "weyl/bipoly.hpp"

namespace weyl {

void BiPoly::add_term(long i, long j, const ParamPoly& c) {
    if (c.is_zero()) return;
    if (i < 0 || j < 0) throw domain_error("negative_exponent", "polynomial exponents must be >= 0");
    auto [it, inserted] = t_.try_emplace(Monomial{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

BiPoly operator+(const BiPoly& l, const BiPoly& r) {
    BiPoly out = l;
    for (auto& [m, c] : r.t_) out.add_term(m.i, m.j, c);
    return out;
}

BiPoly operator-(const BiPoly& l, const BiPoly& r) {
    BiPoly out = l;
    for (auto& [m, c] : r.t_) out.add_term(m.i, m.j, -c);
    return out;
}

BiPoly operator*(const BiPoly& l, const BiPoly& r) {
    BiPoly out;
    for (auto& [ma, ca] : l.t_)
        for (auto& [mb, cb] : r.t_) out.add_term(ma.i + mb.i, ma.j + mb.j, ca * cb);
    return out;
}

BiPoly BiPoly::scaled(const ParamPoly& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (auto& [m, co] : t_) r.add_term(m.i, m.j, co * c);
    return r;
}

BiPoly BiPoly::pow(unsigned long e) const {
    BiPoly acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

BiPoly BiPoly::deriv_x() const {
    BiPoly r;
    for (auto& [m, c] : t_)
        if (m.i > 0) r.add_term(m.i - 1, m.j, c * ParamPoly(Rational(m.i)));
    return r;
}

BiPoly BiPoly::deriv_y() const {
    BiPoly r;
    for (auto& [m, c] : t_)
        if (m.j > 0) r.add_term(m.i, m.j - 1, c * ParamPoly(Rational(m.j)));
    return r;
}

BiPoly poisson(const BiPoly& f, const BiPoly& g) {
    return f.deriv_y() * g.deriv_x() - f.deriv_x() * g.deriv_y();
}

std::optional<ParamRat> proportional(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw domain_error("zero_operand", "proportionality needs nonzero polynomials");
    if (f.terms().size() != g.terms().size()) return std::nullopt;
    std::optional<ParamRat> ratio;
    auto itf = f.terms().begin();
    auto itg = g.terms().begin();
    for (; itf != f.terms().end(); ++itf, ++itg) {
        if (itf->first != itg->first) return std::nullopt;
        ParamRat r(itg->second, itf->second);
        if (!ratio)
            ratio = r;
        else if (!(*ratio == r))
            return std::nullopt;
    }
    return ratio;
}

WeylOp eval_poly(const BiPoly& f, const WeylOp& p, const WeylOp& q) {
    long max_i = 0, max_j = 0;
    for (auto& [m, c] : f.terms()) {
        max_i = std::max(max_i, m.i);
        max_j = std::max(max_j, m.j);
    }
    std::vector<WeylOp> ppow(max_i + 1), qpow(max_j + 1);
    ppow[0] = WeylOp(1);
    for (long k = 1; k <= max_i; ++k) ppow[k] = ppow[k - 1] * p;
    qpow[0] = WeylOp(1);
    for (long k = 1; k <= max_j; ++k) qpow[k] = qpow[k - 1] * q;

    WeylOp out;
    for (auto& [m, c] : f.terms()) out += (ppow[m.i] * qpow[m.j]).scaled(c);
    return out;
}

} // namespace weyl
