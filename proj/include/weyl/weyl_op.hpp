#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "weyl/param_poly.hpp"

namespace weyl {

/// Exponent pair of a normal-form term x^i D^j (D is the derivation).
struct Monomial {
    long i = 0;
    long j = 0;
    auto operator<=>(const Monomial&) const = default;
};

/// Polynomial in x with ParamPoly coefficients; the coefficient ring of the
/// algebra. Trailing zeros are trimmed (zero is the empty vector).
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<ParamPoly> c) : c_(std::move(c)) { trim(); }
    XPoly(const ParamPoly& c) { c_.push_back(c); trim(); }
    XPoly(long c) : XPoly(ParamPoly(c)) {}

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const ParamPoly& coeff(size_t k) const {
        static const ParamPoly kZero;
        return k < c_.size() ? c_[k] : kZero;
    }
    const std::vector<ParamPoly>& coeffs() const { return c_; }
    bool operator==(const XPoly&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<ParamPoly> c_;
};

/// Element of the first Weyl algebra K[a][x][D], [D, x] = 1, stored in
/// normal form: sum of coeff(i,j) * x^i * D^j with x-powers left of
/// D-powers. Terms are kept in a map ordered lexicographically by (i, j)
/// with zero coefficients pruned, so representation is canonical and
/// iteration order deterministic.
class WeylOp {
public:
    WeylOp() = default;
    WeylOp(const ParamPoly& c) { add_term(0, 0, c); }
    WeylOp(const Rational& c) : WeylOp(ParamPoly(c)) {}
    WeylOp(long c) : WeylOp(ParamPoly(c)) {}

    static WeylOp x() { return term(1, 0, ParamPoly(1)); }
    static WeylOp d() { return term(0, 1, ParamPoly(1)); }
    static WeylOp parameter() { return WeylOp(ParamPoly::variable()); }
    static WeylOp term(long i, long j, const ParamPoly& c) {
        WeylOp p;
        p.add_term(i, j, c);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Monomial, ParamPoly>& terms() const { return t_; }

    const ParamPoly& coeff(long i, long j) const {
        static const ParamPoly kZero;
        auto it = t_.find(Monomial{i, j});
        return it == t_.end() ? kZero : it->second;
    }

    void add_term(long i, long j, const ParamPoly& c);

    std::set<Monomial> support() const;

    /// Largest x-exponent / D-exponent over the support (0 for the zero
    /// operator; callers that need an error use ord/ord_x).
    long max_i() const;
    long max_j() const;

    WeylOp operator-() const;
    friend WeylOp operator+(const WeylOp& l, const WeylOp& r);
    friend WeylOp operator-(const WeylOp& l, const WeylOp& r);
    friend WeylOp operator*(const WeylOp& l, const WeylOp& r);
    WeylOp& operator+=(const WeylOp& o) { return *this = *this + o; }
    WeylOp& operator-=(const WeylOp& o) { return *this = *this - o; }
    WeylOp& operator*=(const WeylOp& o) { return *this = *this * o; }

    WeylOp scaled(const ParamPoly& c) const;
    WeylOp pow(unsigned long e) const;

    bool operator==(const WeylOp&) const = default;

    /// Substitute a rational value for the parameter a.
    WeylOp specialize(const Rational& alpha) const;

private:
    std::map<Monomial, ParamPoly> t_;
};

/// Normal form of D^j x^i as a WeylOp:
/// D^j x^i = sum_k k! C(j,k) C(i,k) x^(i-k) D^(j-k).
WeylOp reorder(long j, long i);

/// Reference product kernel, single-threaded.
WeylOp mul_serial(const WeylOp& l, const WeylOp& r);

/// Same product, term pairs expanded in parallel; exact arithmetic makes the
/// merged result identical to the serial kernel.
WeylOp mul_parallel(const WeylOp& l, const WeylOp& r);

WeylOp commutator(const WeylOp& p, const WeylOp& q);

/// (ad p)^n q, iterated commutator.
WeylOp ad_power(const WeylOp& p, const WeylOp& q, unsigned long n);

/// Order in D; error ("zero_operator") on 0.
long ord(const WeylOp& p);
/// Degree in x; error on 0.
long ord_x(const WeylOp& p);

/// Leading coefficient in D: the XPoly at D^ord. Error on 0.
XPoly highest_term(const WeylOp& p);

bool is_monic(const WeylOp& p);

/// Coefficient of D^l as an XPoly (zero when absent).
XPoly coeff_of_dpow(const WeylOp& p, long l);

} // namespace weyl
