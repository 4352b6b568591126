#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weyl/weyl_op.hpp"

#include "helpers.hpp"

using namespace weyl;
using testutil::Rng;
using testutil::oracle_d_left;
using testutil::oracle_mul;
using testutil::thrown_name;

TEST_CASE("commutation relation and canonical storage") {
    WeylOp x = WeylOp::x();
    WeylOp d = WeylOp::d();
    CHECK(d * x - x * d == WeylOp(1));
    CHECK(commutator(d, x) == WeylOp(1));
    CHECK(commutator(x, d) == WeylOp(-1));
    CHECK(commutator(x, x).is_zero());

    // Zero coefficients are pruned, so equal values compare equal.
    WeylOp p = x * d;
    p.add_term(2, 2, ParamPoly(5));
    p.add_term(2, 2, ParamPoly(-5));
    CHECK(p == x * d);
    CHECK(p.term_count() == 1);
    CHECK(thrown_name([&] { p.add_term(-1, 0, ParamPoly(1)); }) == "negative_exponent");
}

TEST_CASE("reorder agrees with iterated single-step rewriting") {
    // D^j x^i via j elementary passes of D x^i = x^i D + i x^{i-1}.
    for (long j = 0; j <= 8; ++j)
        for (long i = 0; i <= 8; ++i) {
            WeylOp rhs = WeylOp::term(i, 0, ParamPoly(1));
            for (long s = 0; s < j; ++s) rhs = oracle_d_left(rhs);
            CHECK(reorder(j, i) == rhs);
        }
    CHECK(thrown_name([] { reorder(-1, 0); }) == "negative_exponent");
}

TEST_CASE("a worked square") {
    WeylOp w = WeylOp::d() * WeylOp::d() - WeylOp::x().pow(3);
    WeylOp sq = w * w;
    // (D^2 - x^3)^2 = D^4 - 2x^3 D^2 - 6x^2 D - 6x + x^6
    CHECK(sq.coeff(0, 4) == ParamPoly(1));
    CHECK(sq.coeff(3, 2) == ParamPoly(-2));
    CHECK(sq.coeff(2, 1) == ParamPoly(-6));
    CHECK(sq.coeff(1, 0) == ParamPoly(-6));
    CHECK(sq.coeff(6, 0) == ParamPoly(1));
    CHECK(sq.term_count() == 5);
}

TEST_CASE("product kernel matches the rewrite oracle") {
    Rng rng(303);
    for (int t = 0; t < 300; ++t) {
        WeylOp p = rng.op(6, 4, t % 4 == 0);
        WeylOp q = rng.op(6, 4, t % 5 == 0);
        CHECK(p * q == oracle_mul(p, q));
    }
}

TEST_CASE("parallel product equals the serial reference") {
    Rng rng(404);
    for (int t = 0; t < 100; ++t) {
        WeylOp p = rng.op(7, 6, t % 3 == 0);
        WeylOp q = rng.op(7, 6, false);
        CHECK(mul_parallel(p, q) == mul_serial(p, q));
    }
}

TEST_CASE("ring laws on random operators") {
    Rng rng(505);
    for (int t = 0; t < 50; ++t) {
        WeylOp p = rng.op(5, 3), q = rng.op(5, 3), r = rng.op(5, 3, true);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(commutator(p, q) == -commutator(q, p));
        // Leibniz: [p, qr] = [p,q] r + q [p,r]
        CHECK(commutator(p, q * r) == commutator(p, q) * r + q * commutator(p, r));
    }
}

TEST_CASE("derivation powers terminate on polynomial degree") {
    Rng rng(606);
    WeylOp d = WeylOp::d();
    for (int t = 0; t < 20; ++t) {
        WeylOp q = rng.op(5, 4);
        unsigned long steps = static_cast<unsigned long>(q.max_i());
        CHECK(ad_power(d, q, steps + 1).is_zero());
    }
    CHECK(ad_power(d, WeylOp::x().pow(4), 4) == WeylOp(24));
}

TEST_CASE("order, degree and leading data") {
    WeylOp p = WeylOp::term(2, 3, ParamPoly(4)) + WeylOp::term(5, 1, ParamPoly(-1));
    CHECK(ord(p) == 3);
    CHECK(ord_x(p) == 5);
    CHECK(p.max_i() == 5);
    CHECK(p.max_j() == 3);
    CHECK(highest_term(p) == XPoly(std::vector<ParamPoly>{{}, {}, ParamPoly(4)}));
    CHECK(coeff_of_dpow(p, 1) ==
          XPoly(std::vector<ParamPoly>{{}, {}, {}, {}, {}, ParamPoly(-1)}));
    CHECK(coeff_of_dpow(p, 7).is_zero());
    CHECK_FALSE(is_monic(p));
    CHECK(is_monic(WeylOp::d().pow(3) + WeylOp::x()));

    WeylOp zero;
    CHECK(thrown_name([&] { ord(zero); }) == "zero_operator");
    CHECK(thrown_name([&] { ord_x(zero); }) == "zero_operator");
    CHECK(zero.max_i() == 0);
    CHECK(zero.max_j() == 0);
}

TEST_CASE("powers and scaling") {
    Rng rng(707);
    for (int t = 0; t < 15; ++t) {
        WeylOp p = rng.op(4, 3, t % 2 == 0);
        WeylOp byhand(1);
        for (int e = 0; e < 3; ++e) byhand = byhand * p;
        CHECK(p.pow(3) == byhand);
        CHECK(p.pow(0) == WeylOp(1));
        CHECK(p.scaled(ParamPoly(rational_make(-1, 2))) * WeylOp(-2) == p);
    }
}

TEST_CASE("parameter specialization commutes with multiplication") {
    Rng rng(808);
    CHECK(WeylOp::parameter().specialize(rational_make(7, 2)) ==
          WeylOp(rational_make(7, 2)));
    for (int t = 0; t < 40; ++t) {
        WeylOp p = rng.op(5, 3, true), q = rng.op(5, 3, true);
        Rational al = rng.rat(4, 2);
        CHECK((p * q).specialize(al) == p.specialize(al) * q.specialize(al));
        CHECK((p + q).specialize(al) == p.specialize(al) + q.specialize(al));
    }
}
