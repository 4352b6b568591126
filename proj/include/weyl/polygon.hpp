#pragma once

#include <optional>
#include <vector>

#include "weyl/bipoly.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// Weight vector (sigma, rho): x carries weight sigma, D carries rho.
/// (0,0) is rejected; operations that additionally need sigma+rho > 0
/// check that themselves.
struct WeightVec {
    Rational sigma, rho;

    WeightVec(Rational s, Rational r) : sigma(std::move(s)), rho(std::move(r)) {
        if (sigma == 0 && rho == 0)
            throw domain_error("zero_weight", "weight vector (0,0) is not allowed");
    }

    Rational weight(const Monomial& m) const {
        return sigma * m.i + rho * m.j;
    }
    bool positive_total() const { return sigma + rho > 0; }
};

/// Max of sigma*i + rho*j over the support. Error on the zero operator.
Rational weight_degree(const WeylOp& p, const WeightVec& w);

/// The support points attaining weight_degree.
std::set<Monomial> top_set(const WeylOp& p, const WeightVec& w);

/// Weight-maximal terms of p as a commutative polynomial in (x, y),
/// y standing for D. Error on the zero operator.
BiPoly hom_part(const WeylOp& p, const WeightVec& w);

/// Whole support lies on the top line (hom_part captures everything).
bool is_homogeneous(const WeylOp& p, const WeightVec& w);

/// Convex hull vertices of the support, counterclockwise, starting at the
/// lexicographically smallest point. Collinear interior points excluded;
/// degenerate hulls give one or two vertices.
std::vector<Monomial> newton_polygon(const WeylOp& p);

/// The supporting line sigma*x + rho*y = theta together with the support
/// points on it.
struct TopLine {
    Rational sigma, rho, theta;
    std::vector<Monomial> points; // ascending (i,j)
};
TopLine top_line(const WeylOp& p, const WeightVec& w);

/// Decomposition [P,Q] = T + U against the level v(P)+v(Q)-sigma-rho:
/// T carries the terms at exactly that weight, U everything below.
/// A term above the level would falsify the calculus and raises
/// std::logic_error. Requires sigma+rho > 0.
struct CommDecomposition {
    WeylOp T, U;
    Rational level;
};
CommDecomposition commutator_decomposition(const WeylOp& p, const WeylOp& q,
                                           const WeightVec& w);

/// T = 0 in the decomposition; equivalently the Poisson bracket of the two
/// hom parts vanishes.
bool almost_commute(const WeylOp& p, const WeylOp& q, const WeightVec& w);

/// hom_part(p, w) is a single monomial.
bool is_monomial_type(const WeylOp& p, const WeightVec& w);

/// Some support point has i != 0 and j != 0.
bool has_mixture_term(const WeylOp& p);

/// Support fits in [0,l] x [0,k] with the corner (l,k) = (max_i, max_j)
/// present and l,k >= 1; returns the corner when so.
std::optional<Monomial> is_rectangular(const WeylOp& p);

/// Scalar c with g^v = c * f^w, when one exists. v, w >= 0; f, g nonzero.
std::optional<ParamRat> proportional_powers(const BiPoly& f, const BiPoly& g,
                                            long v, long w);

/// First indices in the ad-chain A_r = (ad p)^r q:
///   m: least r with A_r almost-commuting with p,
///   n: least r with hom_part(A_r) a monomial.
/// If the pair already almost-commutes at r = 0, both report 0; otherwise
/// the search runs over r = 1..bound. A chain that dies (A_r = 0) leaves an
/// unmet n as Vanished, which is nonexistence, not a bound failure.
struct AcIndexReport {
    enum class Status { Found, Vanished, BoundExceeded };
    Status n_status, m_status;
    long n = -1, m = -1;
};
AcIndexReport almost_commute_index(const WeylOp& p, const WeylOp& q,
                                   const WeightVec& w, long bound);

} // namespace weyl
