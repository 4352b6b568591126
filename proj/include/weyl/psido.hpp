#pragma once

#include <limits>
#include <map>

#include "weyl/weyl_op.hpp"

namespace weyl {

/// Sentinel for "exact at every order"; low enough that sums of two never
/// overflow a long.
inline constexpr long kNegInf = std::numeric_limits<long>::min() / 4;

/// Truncated power series in x over Q[a]: exactly trunc() coefficients
/// x^0..x^{trunc-1} are known. Arithmetic narrows to the smaller context;
/// a derivative gives up one order. Running out of known orders throws
/// ("x_truncation_exhausted") and callers retry at a wider pad.
class XSeries {
public:
    explicit XSeries(long trunc) : c_(checked(trunc)) {}
    XSeries(const ParamPoly& value, long trunc) : c_(checked(trunc)) {
        c_[0] = value; // constant series
    }

    long trunc() const { return static_cast<long>(c_.size()); }
    const ParamPoly& coeff(long k) const {
        static const ParamPoly kZero;
        return k >= 0 && k < trunc() ? c_[k] : kZero;
    }
    void set_coeff(long k, const ParamPoly& v) { c_.at(k) = v; }

    bool is_zero() const;
    /// Only the x^0 coefficient may be nonzero.
    bool is_constant() const;

    XSeries truncated(long t) const;
    XSeries derivative() const;
    /// Integration constant fixed to 0.
    XSeries antiderivative() const;
    /// Needs a nonzero rational constant term.
    XSeries inverse() const;
    /// Needs a zero constant term.
    XSeries exp() const;

    XSeries scaled(const ParamPoly& v) const;
    XSeries operator-() const;
    friend XSeries operator+(const XSeries& l, const XSeries& r);
    friend XSeries operator-(const XSeries& l, const XSeries& r);
    friend XSeries operator*(const XSeries& l, const XSeries& r);

private:
    static long checked(long t) {
        if (t < 1) throw domain_error("x_truncation_exhausted", "x-precision ran out");
        return t;
    }
    std::vector<ParamPoly> c_;
};

/// Truncated pseudo-differential operator sum_j u_j(x) D^j. Orders at or
/// above floor() are exact (up to each coefficient's x-truncation); below,
/// unknown. Exact lifts of ring elements carry floor() = kNegInf.
class PsiDO {
public:
    PsiDO() = default;

    static PsiDO lift(const WeylOp& p, long xtrunc);
    static PsiDO dpow(long j, long xtrunc);
    static PsiDO from_series(const XSeries& u, long j = 0);

    long floor() const { return floor_; }
    const std::map<long, XSeries>& terms() const { return t_; }
    bool is_zero() const;
    /// Largest order with a nonzero coefficient; kNegInf when none stored.
    long top_nonzero() const;
    XSeries coeff(long j, long xtrunc_if_absent) const;

    void add_term(long j, const XSeries& u);
    void raise_floor(long f);

    PsiDO operator-() const;
    friend PsiDO operator+(const PsiDO& l, const PsiDO& r);
    friend PsiDO operator-(const PsiDO& l, const PsiDO& r);
    PsiDO scaled(const ParamPoly& v) const;

    /// Drop orders below `floor`, require every kept coefficient to be
    /// known to at least x^M, prune exact zeros. Fails with
    /// "undetermined_order" naming the first shortfall.
    PsiDO finalized(long m, long floor) const;

private:
    std::map<long, XSeries> t_;
    long floor_ = kNegInf;
};

/// Composition via D^j a = sum_k C(j,k) a^(k) D^{j-k}; orders below clamp
/// are discarded. Negative orders on the left require a finite clamp.
PsiDO psido_mul(const PsiDO& a, const PsiDO& b, long clamp);
PsiDO psido_pow(const PsiDO& a, unsigned long e, long clamp);

/// Two-sided inverse down to floor_target; the leading coefficient must be
/// a unit with a rational constant term.
PsiDO psido_inverse(const PsiDO& a, long floor_target);

/// R = D + r_0 + r_{-1} D^{-1} + ... with R^q = Q modulo (x^M, D^{q-1-N});
/// Q must be monic of order q >= 1.
PsiDO qth_root(const WeylOp& q_op, long n, long m);

/// Conjugation S^{-1} Q S = c D^q modulo (x^M, D^{q-1-N}); Q needs a
/// constant (rational) leading coefficient and order >= 1. S is built as a
/// zero-constant-term exponential gauge followed by the order-by-order
/// tail 1 + s_1 D^{-1} + ...
struct SchurResult {
    PsiDO S;
    Rational c;
    long q, n, m;
};
SchurResult schur_normalize(const WeylOp& q_op, long n, long m);

/// S^{-1} Q S - c D^q at the result's truncation; empty means the residual
/// vanishes there.
PsiDO schur_residual(const WeylOp& q_op, const SchurResult& sr);

/// Conjugate P by the Schur gauge of Q and test whether every determined
/// coefficient is constant; equivalent to [P,Q] = 0 when the truncation
/// suffices to decide.
struct CentralizerReport {
    bool constant;
    long determined_floor;
    bool has_bad = false;
    long first_bad_order = 0;
};
CentralizerReport centralizer_criterion(const WeylOp& p, const WeylOp& q, long n, long m);

} // namespace weyl
