#pragma once

#include <random>
#include <string>

#include "weyl/error.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl::testutil {

/// Deterministic generator; every test case fixes its own seed so a failure
/// replays bit for bit.
class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    long pick(long lo, long hi) {
        return lo + static_cast<long>(g_() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational rat(long mag = 6, long dmax = 3) {
        return rational_make(pick(-mag, mag), pick(1, dmax));
    }

    Rational rat_nonzero(long mag = 6, long dmax = 3) {
        for (;;) {
            Rational r = rat(mag, dmax);
            if (r != 0) return r;
        }
    }

    ParamPoly poly(bool with_param = false) {
        if (!with_param) return ParamPoly(rat_nonzero());
        std::vector<Rational> c;
        long deg = pick(0, 2);
        for (long k = 0; k <= deg; ++k) c.push_back(rat(3, 2));
        ParamPoly p(std::move(c));
        return p.is_zero() ? ParamPoly(rat_nonzero()) : p;
    }

    /// Nonzero operator with exponents bounded by emax.
    WeylOp op(long emax, long max_terms, bool with_param = false) {
        WeylOp p;
        long terms = pick(1, max_terms);
        for (long t = 0; t < terms; ++t)
            p.add_term(pick(0, emax), pick(0, emax), poly(with_param));
        if (p.is_zero()) p.add_term(0, 0, ParamPoly(1));
        return p;
    }

private:
    std::mt19937_64 g_;
};

/// Left-multiply a normal form by D using only the one-step rule
/// D x^i = x^i D + i x^{i-1}. Independent of the closed-form reordering.
inline WeylOp oracle_d_left(const WeylOp& p) {
    WeylOp out;
    for (const auto& [m, c] : p.terms()) {
        out.add_term(m.i, m.j + 1, c);
        if (m.i > 0) out.add_term(m.i - 1, m.j, c * ParamPoly(m.i));
    }
    return out;
}

/// Product oracle: each left term x^i D^j acts on the right factor by j
/// single D steps followed by an x^i shift.
inline WeylOp oracle_mul(const WeylOp& l, const WeylOp& r) {
    WeylOp out;
    for (const auto& [m, c] : l.terms()) {
        WeylOp acc = r;
        for (long s = 0; s < m.j; ++s) acc = oracle_d_left(acc);
        for (const auto& [mm, cc] : acc.terms())
            out.add_term(mm.i + m.i, mm.j, cc * c);
    }
    return out;
}

/// Tag of the domain_error raised by f, or "" when none is.
template <typename F>
std::string thrown_name(F&& f) {
    try {
        f();
    } catch (const domain_error& e) {
        return e.name();
    } catch (...) {
        return "<other>";
    }
    return "";
}

} // namespace weyl::testutil
