#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weyl/morphism.hpp"

#include "helpers.hpp"

using namespace weyl;
using testutil::Rng;
using testutil::thrown_name;

namespace {

TameGen random_gen(Rng& rng) {
    long kind = rng.pick(0, 3); // linear less often than the shears
    Rational lambda = rng.rat(3, 2);
    long n = rng.pick(0, 3);
    if (kind == 0) return TameGen::phi(n, lambda);
    if (kind <= 2) return TameGen::phi_prime(n, lambda);
    for (;;) {
        Rational a = rng.pick(-3, 3), b = rng.pick(-3, 3);
        Rational c = rng.pick(-3, 3), d = rng.pick(-3, 3);
        if (a * d - b * c == 1) return TameGen::linear(a, b, c, d);
    }
}

TameWord random_word(Rng& rng, long max_len) {
    TameWord w;
    long len = rng.pick(0, max_len);
    for (long t = 0; t < len; ++t) w.push_back(random_gen(rng));
    return w;
}

} // namespace

TEST_CASE("generator images") {
    WeylOp x = WeylOp::x(), d = WeylOp::d();

    TameGen g = TameGen::phi(2, 3);
    CHECK(g.img_x() == x + d.pow(2).scaled(ParamPoly(3)));
    CHECK(g.img_d() == d);

    g = TameGen::phi_prime(1, rational_make(-1, 2));
    CHECK(g.img_d() == d - x.scaled(ParamPoly(rational_make(1, 2))));
    CHECK(g.img_x() == x);

    g = TameGen::linear(0, 1, -1, 0);
    CHECK(g.img_d() == x);
    CHECK(g.img_x() == -d);
    Substitution s = gen_to_sub(g);
    CHECK(is_endomorphism(s));
    CHECK(s.endo_certified);

    CHECK(thrown_name([] { TameGen::linear(1, 1, 1, 1); }) == "not_unimodular");
    CHECK(thrown_name([] { TameGen::phi(-1, 1); }) == "negative_exponent");
}

TEST_CASE("every generator undoes its inverse") {
    Rng rng(1212);
    for (int t = 0; t < 40; ++t) {
        TameGen g = random_gen(rng);
        Substitution s = compose(gen_to_sub(g), gen_to_sub(g.inverse()));
        CHECK(s.img_d == WeylOp::d());
        CHECK(s.img_x == WeylOp::x());
    }
}

TEST_CASE("word text round trip") {
    std::string text = "Phi(2,3);PhiP(1,-1/2);Lin(1,0,2,1)";
    TameWord w = word_parse(text);
    REQUIRE(w.size() == 3);
    CHECK(word_str(w) == text);
    CHECK(w[0].kind == TameGen::Kind::Phi);
    CHECK(w[1].lambda == rational_make(-1, 2));
    CHECK(w[2].kind == TameGen::Kind::Linear);

    CHECK(word_parse("").empty());
    CHECK(word_str(TameWord{}) == "");
    CHECK(thrown_name([] { word_parse("Phi(2"); }) == "word_syntax");
    CHECK(thrown_name([] { word_parse("Bogus(1,2)"); }) == "word_syntax");
    CHECK(thrown_name([] { word_parse("Phi(1,1)PhiP(2,2)"); }) == "word_syntax");
    CHECK(thrown_name([] { word_parse("Phi(-2,1)"); }) == "word_syntax");
}

TEST_CASE("word substitutions are homomorphisms") {
    Rng rng(1313);
    for (int t = 0; t < 25; ++t) {
        Substitution s = word_to_sub(random_word(rng, 4));
        CHECK(s.endo_certified);
        WeylOp p = rng.op(4, 3, t % 3 == 0), q = rng.op(4, 3, false);
        CHECK(apply(s, p * q) == apply(s, p) * apply(s, q));
        CHECK(apply(s, p + q) == apply(s, p) + apply(s, q));
        CHECK(commutator(s.img_d, s.img_x) == WeylOp(1));
    }
}

TEST_CASE("inverse words restore the identity") {
    Rng rng(1414);
    for (int t = 0; t < 20; ++t) {
        TameWord w = random_word(rng, 4);
        Substitution s = word_to_sub(w);
        Substitution si = word_to_sub(word_inverse(w));
        WeylOp p = rng.op(4, 3);
        CHECK(apply(si, apply(s, p)) == p);
        CHECK(apply(s, apply(si, p)) == p);
        CHECK(apply(si, s.img_d) == WeylOp::d());
        CHECK(apply(si, s.img_x) == WeylOp::x());
    }
}

TEST_CASE("composition works through apply") {
    Rng rng(1515);
    Substitution id = identity_sub();
    for (int t = 0; t < 15; ++t) {
        Substitution s1 = word_to_sub(random_word(rng, 3));
        Substitution s2 = word_to_sub(random_word(rng, 3));
        WeylOp p = rng.op(4, 2);
        CHECK(apply(compose(s1, s2), p) == apply(s1, apply(s2, p)));
        CHECK(compose(id, s1).img_d == s1.img_d);
        CHECK(compose(s1, id).img_x == s1.img_x);
    }
}

TEST_CASE("endomorphism certification") {
    Substitution s{WeylOp::d(), WeylOp::x() * WeylOp::x(), false};
    CHECK_FALSE(is_endomorphism(s));
    CHECK_FALSE(s.endo_certified);

    Substitution good{WeylOp::d(), WeylOp::x() + WeylOp::d(), false};
    CHECK(is_endomorphism(good));
    CHECK(good.endo_certified);
}

TEST_CASE("growth rate of monomial-top images") {
    WeightVec w(1, 1);
    Substitution s;
    s.img_d = WeylOp::term(2, 4, ParamPoly(1)) + WeylOp::x();
    s.img_x = WeylOp::term(3, 6, ParamPoly(1)) + WeylOp::d();
    CHECK(epsilon_rate(s, w) == rational_make(3, 2));

    WeightVec rw = rate_weight(rational_make(3, 2));
    CHECK(rw.sigma == 3);
    CHECK(rw.rho == 2);
    CHECK(rate_weight(Rational(2)).sigma == 2);
    CHECK(rate_weight(Rational(2)).rho == 1);

    Substitution bad = s;
    bad.img_d = WeylOp::term(2, 2, ParamPoly(1)) + WeylOp::d().pow(4);
    CHECK(thrown_name([&] { epsilon_rate(bad, w); }) == "non_monomial_top");
    bad.img_d = WeylOp::d().pow(4);
    CHECK(thrown_name([&] { epsilon_rate(bad, w); }) == "non_mixture_top");
    bad.img_d = WeylOp::term(1, 2, ParamPoly(1));
    bad.img_x = WeylOp::term(2, 3, ParamPoly(1));
    CHECK(thrown_name([&] { epsilon_rate(bad, w); }) == "rate_mismatch");
}

TEST_CASE("weight propagation for monomial tops") {
    Rng rng(1616);
    for (int si = 0; si < 50; ++si) {
        long l0 = rng.pick(1, 2), k0 = rng.pick(1, 2);
        long m1 = rng.pick(1, 2), m2 = rng.pick(1, 2);
        long l = m1 * l0, k = m1 * k0;
        Rational eps = rational_make(m2, m1);
        WeightVec w = rate_weight(eps);

        Substitution s;
        s.img_d = WeylOp::term(l, k, ParamPoly(rng.rat_nonzero(3, 1)));
        s.img_x = WeylOp::term(m2 * l0, m2 * k0, ParamPoly(rng.rat_nonzero(3, 1)));
        // Optional strictly lower junk keeps the tops monomial.
        Rational top_d = w.weight(Monomial{l, k});
        for (int tries = 0; tries < 3; ++tries) {
            Monomial m{rng.pick(0, 3), rng.pick(0, 3)};
            if (w.weight(m) < top_d) {
                s.img_d += WeylOp::term(m.i, m.j, ParamPoly(rng.rat(2, 1)));
                break;
            }
        }

        for (int pi = 0; pi < 20; ++pi) {
            long a = rng.pick(0, 4), b = rng.pick(0, 4);
            if (a == 0 && b == 0) a = 1;
            WeylOp p = WeylOp::term(a, b, ParamPoly(rng.rat_nonzero(3, 1)));
            Monomial extra{rng.pick(0, 4), rng.pick(0, 4)};
            if (w.weight(extra) < w.weight(Monomial{a, b}))
                p += WeylOp::term(extra.i, extra.j, ParamPoly(1));

            PropagationCheck pc = weight_propagation_check(s, p, w);
            CHECK(pc.predicted == pc.actual);
            CHECK(pc.image_monomial);
            CHECK(pc.predicted ==
                  (Rational(k) + eps * Rational(l)) * weight_degree(p, w));
        }
    }

    Substitution s{WeylOp::term(1, 1, ParamPoly(1)), WeylOp::term(1, 1, ParamPoly(1)),
                   false};
    CHECK(thrown_name([&] {
              weight_propagation_check(s, WeylOp(3), rate_weight(Rational(1)));
          }) == "constant_operand");
    CHECK(thrown_name([&] {
              weight_propagation_check(s, WeylOp::x(), WeightVec(1, 2));
          }) == "weight_rate_mismatch");
}

TEST_CASE("iterated images keep the predicted top") {
    struct Case {
        long l, k, eps;
    };
    for (Case c : {Case{1, 1, 2}, Case{2, 1, 1}, Case{1, 2, 2}, Case{2, 2, 1},
                   Case{2, 1, 2}, Case{1, 1, 1}}) {
        Substitution s;
        s.img_d = WeylOp::term(c.l, c.k, ParamPoly(1));
        s.img_x = WeylOp::term(c.eps * c.l, c.eps * c.k, ParamPoly(1));
        WeightVec w = rate_weight(Rational(c.eps));
        long t = c.k + c.eps * c.l;

        WeylOp img = WeylOp::d();
        long tt = 1;
        for (long q = 1; q <= 3; ++q) {
            img = apply(s, img);
            CHECK(top_set(img, w) == std::set<Monomial>{{c.l * tt, c.k * tt}});
            CHECK(weight_degree(img, w) ==
                  rational_pow(Rational(t), q) * Rational(w.rho));
            tt *= t;
        }
    }
}

TEST_CASE("killing the x-image top by a power of the D-image") {
    Substitution s{WeylOp::d(), WeylOp::x() + WeylOp::d().pow(2), false};
    Substitution out = reduce_by_power(s);
    CHECK(out.img_x == WeylOp::x());
    CHECK(out.img_d == WeylOp::d());

    // Coefficient in the parameter: beta is a polynomial, not just a scalar.
    s.img_x = WeylOp::x() + WeylOp::d().pow(2).scaled(ParamPoly::variable());
    CHECK(reduce_by_power(s).img_x == WeylOp::x());

    s = Substitution{WeylOp::x() * WeylOp::d(), WeylOp::x() + WeylOp::d().pow(3), false};
    CHECK(thrown_name([&] { reduce_by_power(s); }) == "exponent_not_integral");
    s = Substitution{WeylOp(1), WeylOp::x(), false};
    CHECK(thrown_name([&] { reduce_by_power(s); }) == "exponent_not_integral");
    s = Substitution{WeylOp::d(), WeylOp::x() * WeylOp::x(), false};
    CHECK(thrown_name([&] { reduce_by_power(s); }) == "no_cancel");
}

TEST_CASE("driving a shear square to a vertical top") {
    WeylOp dx = WeylOp::d() + WeylOp::x();
    Substitution s{dx * dx, WeylOp::x(), false};
    RectResult r = rectangularize(s, 8);

    CHECK(r.status == RectStatus::TameExhausted);
    REQUIRE(r.log.size() == 1);
    CHECK(r.log[0].case_label == 'd');
    CHECK(r.log[0].driven == 'D');
    CHECK(r.log[0].measure_before == 4);
    CHECK(r.log[0].measure_after == 2);
    CHECK(r.log[0].mu == -1);
    CHECK(r.log[0].gen.kind == TameGen::Kind::PhiPrime);
    CHECK(r.log[0].gen.n == 1);
    CHECK(word_str(r.word) == "PhiP(1,-1)");
    CHECK(r.s_out.img_d == WeylOp::d().pow(2));
    CHECK(r.s_out.img_d.max_i() == 0); // vertical top reached
    CHECK(r.s_out.img_x == WeylOp::x());
}

TEST_CASE("rectangular inputs are recognized immediately") {
    Substitution s{WeylOp::x() * WeylOp::d(), WeylOp::x() * WeylOp::d().pow(2), false};
    RectResult r = rectangularize(s, 8);
    CHECK(r.status == RectStatus::Rectangular);
    CHECK(r.log.empty());
    CHECK(r.word.empty());
}

TEST_CASE("irrational kill roots are reported, not forced") {
    Substitution s{WeylOp::d().pow(2) + WeylOp::x().pow(2), WeylOp::x(), false};
    RectResult r = rectangularize(s, 8);
    CHECK(r.status == RectStatus::IrrationalRoot);
    CHECK(r.log.empty());
}

TEST_CASE("composition mode can oscillate and stays honest about it") {
    WeylOp dx = WeylOp::d() + WeylOp::x();
    Substitution s{dx * dx + WeylOp::x(), WeylOp::x(), false};
    RectResult r = rectangularize(s, 7);

    CHECK(r.status == RectStatus::StepLimit);
    CHECK(r.log.size() == 7);
    CHECK(r.word.size() == 7);
    for (const RectStep& st : r.log) {
        CHECK(st.measure_after < st.measure_before);
        CHECK((st.driven == 'D' || st.driven == 'x'));
    }
    CHECK(r.log[0].case_label == 'd');
}

TEST_CASE("conjugation mode shrinks the driven image every step") {
    WeylOp dx = WeylOp::d() + WeylOp::x();
    Substitution s{dx * dx, WeylOp::x(), false};
    RectResult r = rectangularize(s, 3, true);
    CHECK(r.word.size() == r.log.size());
    CHECK(r.log.size() <= 3);
    for (const RectStep& st : r.log) CHECK(st.measure_after < st.measure_before);
}

TEST_CASE("rectangularize rejects zero images") {
    CHECK(thrown_name([] {
              rectangularize(Substitution{WeylOp(), WeylOp::x(), false}, 3);
          }) == "zero_operator");
}

TEST_CASE("polygon facts of composed automorphisms") {
    PolygonCheckReport rep = automorphism_polygon_check({});
    CHECK(rep.m == 0);
    CHECK(rep.n == 1);
    CHECK(rep.pass());

    rep = automorphism_polygon_check({TameGen::phi_prime(2, 1)});
    CHECK(rep.m == 2);
    CHECK(rep.n == 1);
    CHECK(rep.pass());

    Rng rng(1717);
    for (int t = 0; t < 200; ++t) {
        TameWord w = random_word(rng, 6);
        PolygonCheckReport r = automorphism_polygon_check(w);
        INFO("word: " << word_str(w));
        CHECK(r.axis_points);
        CHECK(r.extremal_exclusion);
        CHECK(r.divisibility);
        CHECK(r.not_rectangular);
    }
}
