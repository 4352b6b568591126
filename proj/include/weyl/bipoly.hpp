#pragma once

#include <optional>

#include "weyl/param_rat.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// Commutative bivariate polynomial over K[a]. Doubles as the symbol ring
/// for weighted top parts (variables x, y with y the D-symbol) and as the
/// ring of abstract relations f(X, Y). Monomial reuses (i, j) = (first,
/// second) exponents.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const ParamPoly& c) { add_term(0, 0, c); }
    BiPoly(long c) : BiPoly(ParamPoly(c)) {}

    static BiPoly term(long i, long j, const ParamPoly& c) {
        BiPoly f;
        f.add_term(i, j, c);
        return f;
    }
    static BiPoly var_x() { return term(1, 0, ParamPoly(1)); }
    static BiPoly var_y() { return term(0, 1, ParamPoly(1)); }

    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    size_t term_count() const { return t_.size(); }
    const std::map<Monomial, ParamPoly>& terms() const { return t_; }

    const ParamPoly& coeff(long i, long j) const {
        static const ParamPoly kZero;
        auto it = t_.find(Monomial{i, j});
        return it == t_.end() ? kZero : it->second;
    }

    void add_term(long i, long j, const ParamPoly& c);

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& l, const BiPoly& r);
    friend BiPoly operator-(const BiPoly& l, const BiPoly& r);
    friend BiPoly operator*(const BiPoly& l, const BiPoly& r);
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly scaled(const ParamPoly& c) const;
    BiPoly pow(unsigned long e) const;
    BiPoly deriv_x() const;
    BiPoly deriv_y() const;

    bool operator==(const BiPoly&) const = default;

private:
    std::map<Monomial, ParamPoly> t_;
};

/// Poisson bracket matching the top part of the operator commutator under
/// x-left-D-right normal order: {f, g} = f_y g_x - f_x g_y. On monomials,
/// {x^u y^v, x^n y^m} = (v n - u m) x^(u+n-1) y^(v+m-1).
BiPoly poisson(const BiPoly& f, const BiPoly& g);

/// Scalar c with g = c * f, when one exists (f, g nonzero).
std::optional<ParamRat> proportional(const BiPoly& f, const BiPoly& g);

/// Evaluate a relation polynomial on an operator pair: X^i Y^j maps to
/// P^i * Q^j (X-powers multiplied on the left).
WeylOp eval_poly(const BiPoly& f, const WeylOp& p, const WeylOp& q);

} // namespace weyl
