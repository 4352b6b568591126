#include "weyl/polygon.hpp"

#include <algorithm>

namespace weyl {

Rational weight_degree(const WeylOp& p, const WeightVec& w) {
    if (p.is_zero()) throw domain_error("zero_operator", "weight degree of 0 is undefined");
    bool first = true;
    Rational best;
    for (auto& [m, c] : p.terms()) {
        Rational v = w.weight(m);
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

std::set<Monomial> top_set(const WeylOp& p, const WeightVec& w) {
    Rational deg = weight_degree(p, w);
    std::set<Monomial> out;
    for (auto& [m, c] : p.terms())
        if (w.weight(m) == deg) out.insert(m);
    return out;
}

BiPoly hom_part(const WeylOp& p, const WeightVec& w) {
    Rational deg = weight_degree(p, w);
    BiPoly f;
    for (auto& [m, c] : p.terms())
        if (w.weight(m) == deg) f.add_term(m.i, m.j, c);
    return f;
}

bool is_homogeneous(const WeylOp& p, const WeightVec& w) {
    return top_set(p, w).size() == p.term_count();
}

namespace {

// Cross product of OA x OB; positive for a counterclockwise turn.
long cross(const Monomial& o, const Monomial& a, const Monomial& b) {
    return (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i);
}

} // namespace

std::vector<Monomial> newton_polygon(const WeylOp& p) {
    if (p.is_zero()) throw domain_error("zero_operator", "Newton polygon of 0 is undefined");
    std::vector<Monomial> pts;
    for (auto& [m, c] : p.terms()) pts.push_back(m);
    std::sort(pts.begin(), pts.end());
    if (pts.size() <= 2) return pts;

    // Monotone chain; strict turns only, so collinear points drop out.
    std::vector<Monomial> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back(); // first point repeated
    return hull;
}

TopLine top_line(const WeylOp& p, const WeightVec& w) {
    TopLine l{w.sigma, w.rho, weight_degree(p, w), {}};
    for (auto& m : top_set(p, w)) l.points.push_back(m);
    return l;
}

CommDecomposition commutator_decomposition(const WeylOp& p, const WeylOp& q,
                                           const WeightVec& w) {
    if (!w.positive_total())
        throw domain_error("weight_not_positive", "decomposition needs sigma+rho > 0");
    Rational level = weight_degree(p, w) + weight_degree(q, w) - w.sigma - w.rho;
    CommDecomposition out{WeylOp(), WeylOp(), level};
    WeylOp bracket = commutator(p, q); // keep alive: terms() views its map
    for (auto& [m, c] : bracket.terms()) {
        Rational v = w.weight(m);
        if (v == level)
            out.T.add_term(m.i, m.j, c);
        else if (v < level)
            out.U.add_term(m.i, m.j, c);
        else
            throw std::logic_error("commutator term above the decomposition level");
    }
    return out;
}

bool almost_commute(const WeylOp& p, const WeylOp& q, const WeightVec& w) {
    return commutator_decomposition(p, q, w).T.is_zero();
}

bool is_monomial_type(const WeylOp& p, const WeightVec& w) {
    return hom_part(p, w).is_monomial();
}

bool has_mixture_term(const WeylOp& p) {
    for (auto& [m, c] : p.terms())
        if (m.i != 0 && m.j != 0) return true;
    return false;
}

std::optional<Monomial> is_rectangular(const WeylOp& p) {
    if (p.is_zero()) throw domain_error("zero_operator", "rectangularity of 0 is undefined");
    Monomial corner{p.max_i(), p.max_j()};
    if (corner.i < 1 || corner.j < 1) return std::nullopt;
    if (p.coeff(corner.i, corner.j).is_zero()) return std::nullopt;
    return corner;
}

std::optional<ParamRat> proportional_powers(const BiPoly& f, const BiPoly& g,
                                            long v, long w) {
    if (f.is_zero() || g.is_zero())
        throw domain_error("zero_operand", "proportional_powers needs nonzero polynomials");
    if (v < 0 || w < 0)
        throw domain_error("negative_exponent", "proportional_powers needs v, w >= 0");
    return proportional(f.pow(w), g.pow(v));
}

AcIndexReport almost_commute_index(const WeylOp& p, const WeylOp& q,
                                   const WeightVec& w, long bound) {
    if (bound < 1) throw domain_error("bad_bound", "bound must be >= 1");
    AcIndexReport rep{AcIndexReport::Status::BoundExceeded,
                      AcIndexReport::Status::BoundExceeded, -1, -1};

    // r = 0 convention: an already almost-commuting pair reports (0, 0).
    if (!q.is_zero() && almost_commute(p, q, w)) {
        rep.n_status = rep.m_status = AcIndexReport::Status::Found;
        rep.n = rep.m = 0;
        return rep;
    }

    WeylOp a = q;
    for (long r = 1; r <= bound; ++r) {
        a = commutator(p, a);
        if (a.is_zero()) {
            // Zero commutes with everything; the monomial condition can no
            // longer ever be met.
            if (rep.m_status != AcIndexReport::Status::Found) {
                rep.m_status = AcIndexReport::Status::Found;
                rep.m = r;
            }
            if (rep.n_status != AcIndexReport::Status::Found)
                rep.n_status = AcIndexReport::Status::Vanished;
            return rep;
        }
        if (rep.n_status != AcIndexReport::Status::Found && is_monomial_type(a, w)) {
            rep.n_status = AcIndexReport::Status::Found;
            rep.n = r;
        }
        if (rep.m_status != AcIndexReport::Status::Found && almost_commute(p, a, w)) {
            rep.m_status = AcIndexReport::Status::Found;
            rep.m = r;
        }
        if (rep.n_status == AcIndexReport::Status::Found &&
            rep.m_status == AcIndexReport::Status::Found)
            return rep;
    }
    return rep;
}

} // namespace weyl
