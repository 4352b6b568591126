#include <algorithm>

#include "weyl/morphism.hpp"

namespace weyl {

namespace {

long box_measure(const WeylOp& p) {
    return p.is_zero() ? 0 : p.max_i() + p.max_j();
}

// An image we can still make progress on: genuinely two-dimensional
// support that is not yet rectangular.
bool drivable(const WeylOp& p) {
    if (p.is_zero()) return false;
    if (p.max_i() < 1 || p.max_j() < 1) return false;
    return !is_rectangular(p).has_value();
}

// Divisors of |n| by trial division. Inputs beyond the factoring budget
// abort the root search rather than risk a missed divisor.
std::vector<Integer> divisors(const Integer& n) {
    Integer m = abs(n);
    if (m == 0 || m > Integer(1000000000000L))
        throw domain_error("root_budget", "root candidate bound too large to factor");
    std::vector<std::pair<Integer, unsigned>> fac;
    Integer d = 2;
    while (d * d <= m) {
        if (m % d == 0) {
            unsigned e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<Integer> out{1};
    for (auto& [prime, mult] : fac) {
        size_t have = out.size();
        Integer pk = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            pk *= prime;
            for (size_t t = 0; t < have; ++t) out.push_back(out[t] * pk);
        }
    }
    return out;
}

// First (smallest) rational root of sum c_s t^s, where the c_s live in
// Q[a] and the root must annihilate every a-degree at once. c_0 != 0.
std::optional<Rational> first_rational_root(const std::vector<ParamPoly>& c) {
    long adeg = 0;
    for (auto& p : c) adeg = std::max(adeg, p.degree());
    // One a-slice with nonzero constant term supplies the candidate set.
    long slice = -1;
    for (long dd = 0; dd <= adeg; ++dd)
        if (c[0].coeff(dd) != 0) {
            slice = dd;
            break;
        }
    if (slice < 0) throw std::logic_error("kill polynomial lost its constant term");

    std::vector<Rational> sc;
    for (auto& p : c) sc.push_back(p.coeff(static_cast<size_t>(slice)));
    while (!sc.empty() && sc.back() == 0) sc.pop_back();
    Integer lcm = 1;
    for (auto& r : sc) lcm = lcm / gcd(lcm, Integer(r.get_den())) * Integer(r.get_den());
    std::vector<Integer> ic;
    for (auto& r : sc) {
        Rational v = r * Rational(lcm);
        ic.push_back(Integer(v.get_num()));
    }

    std::set<Rational> candidates;
    for (auto& u : divisors(ic.front()))
        for (auto& w : divisors(ic.back())) {
            candidates.insert(Rational(u) / Rational(w));
            candidates.insert(Rational(-u) / Rational(w));
        }
    for (auto& mu : candidates) {
        ParamPoly val;
        Rational power(1);
        for (auto& cs : c) {
            val += cs * ParamPoly(power);
            power *= mu;
        }
        if (val.is_zero()) return mu;
    }
    return std::nullopt;
}

struct Move {
    char case_label;
    bool vertical;
    long e;
    std::vector<ParamPoly> kill; // kill[s] = coefficient of the root poly at t^s
};

// Slope of the supporting top edge at the pure-D vertex (0,k): the largest
// admissible e with e*i + j <= k over the support. Integral or nothing.
std::optional<long> flatten_slope(const WeylOp& p, long k) {
    bool any = false;
    Rational best;
    for (auto& [m, c] : p.terms()) {
        if (m.i == 0) continue;
        Rational s = Rational(k - m.j) / Rational(m.i);
        if (!any || s < best) best = s;
        any = true;
    }
    if (!any || !rational_is_integer(best) || best <= 0) return std::nullopt;
    return rational_to_long(best);
}

std::optional<long> vertical_slope(const WeylOp& p, long l) {
    bool any = false;
    Rational best;
    for (auto& [m, c] : p.terms()) {
        if (m.j == 0) continue;
        Rational s = Rational(l - m.i) / Rational(m.j);
        if (!any || s < best) best = s;
        any = true;
    }
    if (!any || !rational_is_integer(best) || best <= 0) return std::nullopt;
    return rational_to_long(best);
}

// Pick the kill move for the driven image. allow_flat / allow_vert encode
// the conjugation-mode restriction (the inner inverse must fix the other
// generator of the algebra).
Move select_move(const WeylOp& p, bool allow_flat, bool allow_vert) {
    long l = p.max_i(), k = p.max_j();

    bool flat_ok = false;
    long e_flat = 0;
    if (allow_flat && !p.coeff(0, k).is_zero()) {
        bool lone_row = true;
        for (auto& [m, c] : p.terms())
            if (m.j == k && m.i > 0) lone_row = false;
        if (lone_row)
            if (auto e = flatten_slope(p, k)) {
                flat_ok = true;
                e_flat = *e;
            }
    }
    bool vert_ok = false;
    long e_vert = 0;
    if (allow_vert && !p.coeff(l, 0).is_zero()) {
        bool lone_col = true;
        for (auto& [m, c] : p.terms())
            if (m.i == l && m.j > 0) lone_col = false;
        if (lone_col)
            if (auto e = vertical_slope(p, l)) {
                vert_ok = true;
                e_vert = *e;
            }
    }
    if (!flat_ok && !vert_ok)
        throw domain_error("polygon_shape",
                           "no reduction move applies to the driven image's top");

    bool shared_edge = flat_ok && vert_ok && e_flat * l == k;
    Move mv;
    if (shared_edge || !flat_ok) {
        mv.case_label = shared_edge ? 'd' : 'c';
        mv.vertical = true;
        mv.e = e_vert;
        for (long s = 0; l - mv.e * s >= 0; ++s) mv.kill.push_back(p.coeff(l - mv.e * s, s));
    } else {
        mv.case_label = 'b';
        mv.vertical = false;
        mv.e = e_flat;
        for (long s = 0; k - mv.e * s >= 0; ++s) mv.kill.push_back(p.coeff(s, k - mv.e * s));
    }
    return mv;
}

} // namespace

RectResult rectangularize(const Substitution& s, long max_steps, bool conjugation) {
    if (s.img_d.is_zero() || s.img_x.is_zero())
        throw domain_error("zero_operator", "rectangularize needs nonzero images");

    RectResult res{{}, s, RectStatus::StepLimit, {}};
    for (long step = 0; step < max_steps; ++step) {
        bool rect_d = is_rectangular(res.s_out.img_d).has_value();
        bool rect_x = is_rectangular(res.s_out.img_x).has_value();
        if (rect_d && rect_x) {
            res.status = RectStatus::Rectangular;
            return res;
        }
        bool drive_d = drivable(res.s_out.img_d);
        bool drive_x = drivable(res.s_out.img_x);
        if (!drive_d && !drive_x) {
            res.status = RectStatus::TameExhausted;
            return res;
        }
        const bool on_d = drive_d;
        const WeylOp& driven = on_d ? res.s_out.img_d : res.s_out.img_x;
        long before = box_measure(driven);

        // In conjugation mode the move's inverse acts first; it must fix
        // the image we are not driving through the whole sandwich.
        bool allow_flat = !conjugation || on_d;
        bool allow_vert = !conjugation || !on_d;
        Move mv = select_move(driven, allow_flat, allow_vert);

        auto mu = first_rational_root(mv.kill);
        if (!mu) {
            res.status = RectStatus::IrrationalRoot;
            return res;
        }
        TameGen g = mv.vertical ? TameGen::phi_prime(mv.e, *mu) : TameGen::phi(mv.e, *mu);
        Substitution gs = gen_to_sub(g);
        if (conjugation)
            res.s_out = compose(gs, compose(res.s_out, gen_to_sub(g.inverse())));
        else
            res.s_out = compose(gs, res.s_out);
        res.word.push_back(g);

        long after = box_measure(on_d ? res.s_out.img_d : res.s_out.img_x);
        if (after >= before)
            throw std::logic_error("rectangularize move failed to shrink the driven image");
        res.log.push_back(RectStep{mv.case_label,
                                   mv.vertical ? Rational(1) : Rational(mv.e),
                                   mv.vertical ? Rational(mv.e) : Rational(1), *mu, g,
                                   before, after, on_d ? 'D' : 'x'});
    }
    return res;
}

} // namespace weyl
