#pragma once

#include <array>
#include <string>

#include "weyl/bipoly.hpp"
#include "weyl/morphism.hpp"
#include "weyl/param_rat.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// An operator pair tied to the plane curve it satisfies: relation(P, Q) = 0
/// with at least one of the two of positive order.
struct SolutionPair {
    WeylOp p, q;
    BiPoly relation;
};

/// Validates the defining identity before wrapping; rejects the zero
/// relation ("trivial_relation"), non-vanishing ("relation_violated") and
/// pairs of two constants ("constant_pair").
SolutionPair make_solution_pair(const WeylOp& p, const WeylOp& q, const BiPoly& relation);

/// The order-(4,6) commuting pair built from W = D^2 - x^3 + a:
/// P = W^2 - 2x, Q = W^3 - (3/2)(xW + Wx), with Q^2 = P^3 - a.
SolutionPair dixmier_pair();
/// Same pair with the parameter specialised to a rational value.
SolutionPair dixmier_pair_at(const Rational& alpha);

/// Relation identity plus commutation; a violation is a broken internal
/// invariant, not bad input.
void commutation_check(const SolutionPair& sp);

/// Basis of all relations sum c_{ij} P^i Q^j = 0 with i <= deg_x,
/// j <= deg_y. Kernel vectors are cleared of denominators and made
/// primitive with a monic first nonzero coefficient.
std::vector<BiPoly> find_relation(const WeylOp& p, const WeylOp& q, long deg_x, long deg_y);

/// Structure of the pair under ad P, probed through the chain
/// A_0 = Q, A_{k+1} = [P, A_k] up to k = bound.
struct SpaceProbeReport {
    long span_rank = 0;       ///< rank of span{A_0..A_bound}
    bool stabilized = false;  ///< rank already reached at bound-1
    bool nilpotent = false;
    long nilpotency = 0;      ///< smallest m with the m-fold bracket zero
    bool has_eigen = false;
    ParamRat eigenvalue;      ///< [P,Q] = lambda Q when has_eigen
    bool central = false;     ///< [P,Q] = 0
};
SpaceProbeReport space_probes(const WeylOp& p, const WeylOp& q, long bound);

/// gcd of the D-orders realised by monomials in the generators, scanned up
/// to `bound`; the rank of the graded semigroup they span.
struct RingRankReport {
    long rank = 0;
    bool stabilized = false;
};
RingRankReport ring_rank(const std::vector<WeylOp>& gens, long bound);

/// Breadth-first orbit of a pair under tame generator images, deduplicated
/// by canonical rendering. Each visited pair is re-verified against the
/// relation and commutation. Frontier expansion runs in parallel; the merge
/// is sequential in queue order, so results are deterministic.
struct OrbitReport {
    long distinct = 0;
    long explored_depth = 0;
    bool budget_exceeded = false;
    long collision_count = 0;
    /// First few collisions as word pairs (earlier word first).
    std::vector<std::array<std::string, 2>> collisions;
};
OrbitReport orbit_search(const SolutionPair& start, const std::vector<TameGen>& gens,
                         long depth, long budget);

} // namespace weyl
