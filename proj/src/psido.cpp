#include "weyl/psido.hpp"

#include <stdexcept>

namespace weyl {

namespace {

long min_trunc(const XSeries& l, const XSeries& r) {
    return std::min(l.trunc(), r.trunc());
}

} // namespace

bool XSeries::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool XSeries::is_constant() const {
    for (size_t k = 1; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

XSeries XSeries::truncated(long t) const {
    XSeries r(std::min(t, trunc()));
    for (long k = 0; k < r.trunc(); ++k) r.c_[k] = c_[k];
    return r;
}

XSeries XSeries::derivative() const {
    XSeries r(trunc() - 1);
    for (long k = 0; k < r.trunc(); ++k) r.c_[k] = c_[k + 1] * ParamPoly(k + 1);
    return r;
}

XSeries XSeries::antiderivative() const {
    XSeries r(trunc() + 1);
    for (long k = 0; k < trunc(); ++k)
        r.c_[k + 1] = c_[k] * ParamPoly(Rational(1) / Rational(k + 1));
    return r;
}

XSeries XSeries::inverse() const {
    const ParamPoly& c0 = c_[0];
    if (c0.is_zero() || !c0.is_rational())
        throw domain_error("non_invertible",
                           "series unit must have a nonzero rational constant term");
    Rational inv0 = Rational(1) / c0.as_rational();
    XSeries g(trunc());
    g.c_[0] = ParamPoly(inv0);
    for (long k = 1; k < trunc(); ++k) {
        ParamPoly acc;
        for (long i = 1; i <= k; ++i) acc = acc + c_[i] * g.c_[k - i];
        g.c_[k] = acc * ParamPoly(-inv0);
    }
    return g;
}

XSeries XSeries::exp() const {
    if (!c_[0].is_zero())
        throw domain_error("non_invertible", "exp needs a zero constant term");
    XSeries acc(ParamPoly(1), trunc());
    XSeries term(ParamPoly(1), trunc());
    for (long n = 1; n < trunc(); ++n) {
        term = (term * *this).scaled(ParamPoly(Rational(1) / Rational(n)));
        acc = acc + term;
    }
    return acc;
}

XSeries XSeries::scaled(const ParamPoly& v) const {
    XSeries r(trunc());
    for (long k = 0; k < trunc(); ++k) r.c_[k] = c_[k] * v;
    return r;
}

XSeries XSeries::operator-() const { return scaled(ParamPoly(-1)); }

XSeries operator+(const XSeries& l, const XSeries& r) {
    XSeries s(min_trunc(l, r));
    for (long k = 0; k < s.trunc(); ++k) s.c_[k] = l.c_[k] + r.c_[k];
    return s;
}

XSeries operator-(const XSeries& l, const XSeries& r) {
    XSeries s(min_trunc(l, r));
    for (long k = 0; k < s.trunc(); ++k) s.c_[k] = l.c_[k] - r.c_[k];
    return s;
}

XSeries operator*(const XSeries& l, const XSeries& r) {
    XSeries s(min_trunc(l, r));
    for (long k = 0; k < s.trunc(); ++k) {
        ParamPoly acc;
        for (long i = 0; i <= k; ++i) acc = acc + l.c_[i] * r.c_[k - i];
        s.c_[k] = acc;
    }
    return s;
}

PsiDO PsiDO::lift(const WeylOp& p, long xtrunc) {
    PsiDO r;
    for (const auto& [mon, c] : p.terms()) {
        XSeries u(xtrunc);
        if (mon.i < xtrunc) u.set_coeff(mon.i, c);
        r.add_term(mon.j, u);
    }
    return r;
}

PsiDO PsiDO::dpow(long j, long xtrunc) {
    PsiDO r;
    r.add_term(j, XSeries(ParamPoly(1), xtrunc));
    return r;
}

PsiDO PsiDO::from_series(const XSeries& u, long j) {
    PsiDO r;
    r.add_term(j, u);
    return r;
}

bool PsiDO::is_zero() const {
    for (const auto& [j, u] : t_)
        if (!u.is_zero()) return false;
    return true;
}

long PsiDO::top_nonzero() const {
    for (auto it = t_.rbegin(); it != t_.rend(); ++it)
        if (!it->second.is_zero()) return it->first;
    return kNegInf;
}

XSeries PsiDO::coeff(long j, long xtrunc_if_absent) const {
    auto it = t_.find(j);
    return it != t_.end() ? it->second : XSeries(xtrunc_if_absent);
}

void PsiDO::add_term(long j, const XSeries& u) {
    if (j < floor_) return;
    auto it = t_.find(j);
    if (it == t_.end())
        t_.emplace(j, u);
    else
        it->second = it->second + u;
}

void PsiDO::raise_floor(long f) {
    if (f <= floor_) return;
    floor_ = f;
    t_.erase(t_.begin(), t_.lower_bound(f));
}

PsiDO PsiDO::operator-() const { return scaled(ParamPoly(-1)); }

PsiDO operator+(const PsiDO& l, const PsiDO& r) {
    PsiDO s;
    s.t_ = l.t_;
    s.floor_ = l.floor_;
    s.raise_floor(r.floor_);
    for (const auto& [j, u] : r.t_) s.add_term(j, u);
    return s;
}

PsiDO operator-(const PsiDO& l, const PsiDO& r) { return l + (-r); }

PsiDO PsiDO::scaled(const ParamPoly& v) const {
    PsiDO s;
    s.floor_ = floor_;
    for (const auto& [j, u] : t_) s.t_.emplace(j, u.scaled(v));
    return s;
}

PsiDO PsiDO::finalized(long m, long floor) const {
    if (floor_ > floor)
        throw domain_error("undetermined_order",
                           "result only determined above order " + std::to_string(floor_));
    PsiDO r;
    r.floor_ = floor;
    for (const auto& [j, u] : t_) {
        if (j < floor) continue;
        if (u.trunc() < m)
            throw domain_error("undetermined_order",
                               "coefficient of order " + std::to_string(j) +
                                   " known only to x^" + std::to_string(u.trunc()));
        if (u.is_zero()) continue;
        r.t_.emplace(j, u.truncated(m));
    }
    return r;
}

PsiDO psido_mul(const PsiDO& a, const PsiDO& b, long clamp) {
    // Floor of the product: the unknown tail of either factor, shifted by
    // the other's top, plus the explicit clamp.
    long ta = a.terms().empty() ? a.floor() : a.terms().rbegin()->first;
    long tb = b.terms().empty() ? b.floor() : b.terms().rbegin()->first;
    long floor_res = std::max({a.floor() + tb, b.floor() + ta, clamp});

    if (clamp == kNegInf)
        for (const auto& [j, u] : a.terms())
            if (j < 0)
                throw std::logic_error("psido_mul: negative left order needs a finite clamp");

    PsiDO r;
    r.raise_floor(floor_res);
    for (const auto& [m, bm] : b.terms()) {
        std::vector<XSeries> derivs{bm};
        for (const auto& [j, aj] : a.terms()) {
            long kmax = j + m - floor_res;
            if (j >= 0) kmax = std::min(kmax, j);
            for (long k = 0; k <= kmax; ++k) {
                Rational bin = binomial_signed(j, static_cast<unsigned long>(k));
                if (bin == 0) continue;
                while (static_cast<long>(derivs.size()) <= k)
                    derivs.push_back(derivs.back().derivative());
                r.add_term(j + m - k, (aj * derivs[k]).scaled(ParamPoly(bin)));
            }
        }
    }
    return r;
}

PsiDO psido_pow(const PsiDO& a, unsigned long e, long clamp) {
    long xt = a.terms().empty() ? 1 : a.terms().begin()->second.trunc();
    PsiDO acc = PsiDO::dpow(0, xt);
    for (unsigned long k = 0; k < e; ++k) acc = psido_mul(acc, a, clamp);
    return acc;
}

PsiDO psido_inverse(const PsiDO& a, long floor_target) {
    long m = a.top_nonzero();
    if (m == kNegInf) throw domain_error("zero_operator", "cannot invert zero");
    XSeries u = a.coeff(m, 1);
    PsiDO u_inv = psido_mul(PsiDO::dpow(-m, u.trunc()), PsiDO::from_series(u.inverse()),
                            floor_target);
    // A = uD^m + R, so A^{-1} = (1 + U^{-1}R)^{-1} U^{-1} via a Neumann sum;
    // top(U^{-1}R) <= -1 makes it finite at this truncation.
    PsiDO rest = a - PsiDO::from_series(u, m);
    PsiDO w = psido_mul(u_inv, rest, floor_target - 1);
    if (!w.is_zero() && w.top_nonzero() >= 0)
        throw std::logic_error("psido_inverse: remainder not lower order");
    PsiDO acc = PsiDO::dpow(0, u.trunc());
    PsiDO power = acc;
    while (true) {
        power = psido_mul(power, -w, floor_target - 1);
        if (power.is_zero() || power.top_nonzero() < floor_target - m) break;
        acc = acc + power;
    }
    return psido_mul(acc, u_inv, floor_target);
}

PsiDO qth_root(const WeylOp& q_op, long n, long m) {
    long q = ord(q_op);
    if (q < 1) throw domain_error("order_too_small", "root needs order >= 1");
    if (!is_monic(q_op)) throw domain_error("not_monic", "root needs a monic operator");
    long clamp = q - 1 - n;
    long pad0 = (n + q + 2) * (n + q + 4) + m;
    for (int attempt = 0; attempt < 3; ++attempt) {
        long xt = m + (pad0 << attempt);
        try {
            PsiDO ql = PsiDO::lift(q_op, xt);
            PsiDO r = PsiDO::dpow(1, xt);
            for (long guard = 0; ; ++guard) {
                if (guard > n + q + 2) throw std::logic_error("qth_root: no progress");
                PsiDO e = ql - psido_pow(r, static_cast<unsigned long>(q), clamp);
                long t = e.top_nonzero();
                if (t == kNegInf || t < clamp) break;
                XSeries corr = e.coeff(t, xt).scaled(ParamPoly(Rational(1) / Rational(q)));
                r = r + PsiDO::from_series(corr, t - q + 1);
            }
            return r.finalized(m, -n);
        } catch (const domain_error& err) {
            std::string name = err.name();
            if (name != "x_truncation_exhausted" && name != "undetermined_order") throw;
        }
    }
    throw domain_error("undetermined_order", "root did not stabilise at this truncation");
}

namespace {

/// schur_normalize at a fixed working width, with S kept at full precision;
/// finalization to the contract window happens at the public boundary.
struct RawSchur {
    PsiDO S;
    Rational c;
    long q;
};

RawSchur schur_at(const WeylOp& q_op, long n, long m, long xt) {
    long q = ord(q_op);
    if (q < 1) throw domain_error("order_too_small", "normalization needs order >= 1");
    XPoly ht = highest_term(q_op);
    if (!ht.is_constant() || !ht.coeff(0).is_rational() || ht.coeff(0).is_zero())
        throw domain_error("leading_not_constant",
                           "leading coefficient must be a nonzero rational constant");
    Rational c = ht.coeff(0).as_rational();
    WeylOp q1 = q_op.scaled(ParamPoly(Rational(1) / c));
    long clamp = q - 1 - n;

    // Gauge by exp(u) with u' = -a_{q-1}/q kills the subleading coefficient.
    XSeries sub(xt);
    XPoly aq1 = coeff_of_dpow(q1, q - 1);
    for (long k = 0; k < std::min<long>(aq1.degree() + 1, xt); ++k)
        sub.set_coeff(k, aq1.coeff(k));
    XSeries u = sub.scaled(ParamPoly(Rational(-1) / Rational(q))).antiderivative();
    PsiDO gauge = PsiDO::from_series(u.exp());
    PsiDO gauge_inv = PsiDO::from_series((-u).exp());
    PsiDO q2 = psido_mul(gauge_inv, psido_mul(PsiDO::lift(q1, xt), gauge, clamp), clamp);

    // Tail 1 + s_1 D^{-1} + ...: at order q-1-k the defect e is absorbed by
    // s_k = int(-e/q), since adding s_k D^{-k} shifts the defect by q s_k'.
    PsiDO s = PsiDO::dpow(0, xt);
    PsiDO dq = PsiDO::dpow(q, xt);
    for (long k = 1; k <= n; ++k) {
        PsiDO e_op = psido_mul(q2, s, clamp) - psido_mul(s, dq, clamp);
        long t = e_op.top_nonzero();
        if (t != kNegInf && t > q - 1 - k)
            throw std::logic_error("schur: defect above current order");
        XSeries e = e_op.coeff(q - 1 - k, xt);
        XSeries sk = e.scaled(ParamPoly(Rational(-1) / Rational(q))).antiderivative();
        s = s + PsiDO::from_series(sk, -k);
    }
    return {psido_mul(gauge, s, -n), c, q};
}

} // namespace

SchurResult schur_normalize(const WeylOp& q_op, long n, long m) {
    long q = std::max<long>(ord(q_op), 1);
    long pad0 = (n + q + 2) * (n + q + 4) + m;
    for (int attempt = 0; attempt < 3; ++attempt) {
        try {
            RawSchur raw = schur_at(q_op, n, m, m + (pad0 << attempt));
            return {raw.S.finalized(m, -n), raw.c, raw.q, n, m};
        } catch (const domain_error& err) {
            std::string name = err.name();
            if (name != "x_truncation_exhausted" && name != "undetermined_order") throw;
        }
    }
    throw domain_error("undetermined_order",
                       "normalization did not stabilise at this truncation");
}

PsiDO schur_residual(const WeylOp& q_op, const SchurResult& sr) {
    long clamp = sr.q - 1 - sr.n;
    long pad = (sr.n + sr.q + 3) * (sr.n + sr.q + 5) + sr.m;
    for (int attempt = 0; attempt < 3; ++attempt) {
        long xt = sr.m + (pad << attempt);
        try {
            // Rebuild the gauge one tail order deeper than the contract so
            // the conjugate is pinned down through order q-1-n itself.
            RawSchur wide = schur_at(q_op, sr.n + 1, sr.m, xt);
            PsiDO s = wide.S;
            PsiDO s_inv = psido_inverse(s, clamp - sr.q);
            PsiDO conj = psido_mul(s_inv, psido_mul(PsiDO::lift(q_op, xt), s, clamp), clamp);
            PsiDO expect = PsiDO::dpow(sr.q, xt).scaled(ParamPoly(sr.c));
            return (conj - expect).finalized(sr.m, clamp);
        } catch (const domain_error& err) {
            std::string name = err.name();
            if (name != "x_truncation_exhausted" && name != "undetermined_order") throw;
        }
    }
    throw domain_error("undetermined_order", "residual undetermined at this truncation");
}

CentralizerReport centralizer_criterion(const WeylOp& p, const WeylOp& q, long n, long m) {
    if (p.is_zero()) return {true, 0, false, 0};
    long tp = ord(p);
    long qq = ord(q);
    long df = std::max(qq - 1, tp) - n;
    long pad = (n + qq + 3) * (n + qq + 5) + m + tp;
    for (int attempt = 0; attempt < 3; ++attempt) {
        long xt = m + (pad << attempt);
        try {
            RawSchur wide = schur_at(q, n, m, xt);
            PsiDO s_inv = psido_inverse(wide.S, df - tp);
            PsiDO conj =
                psido_mul(s_inv, psido_mul(PsiDO::lift(p, xt), wide.S, df), df);
            PsiDO fin = conj.finalized(m, df);
            CentralizerReport rep{true, df, false, 0};
            for (auto it = fin.terms().rbegin(); it != fin.terms().rend(); ++it) {
                if (!it->second.is_constant()) {
                    rep.constant = false;
                    rep.has_bad = true;
                    rep.first_bad_order = it->first;
                    break;
                }
            }
            return rep;
        } catch (const domain_error& err) {
            std::string name = err.name();
            if (name != "x_truncation_exhausted" && name != "undetermined_order") throw;
        }
    }
    throw domain_error("undetermined_order", "criterion undetermined at this truncation");
}

} // namespace weyl
