#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weyl/linalg.hpp"
#include "weyl/param_poly.hpp"
#include "weyl/param_rat.hpp"
#include "weyl/rational.hpp"

#include "helpers.hpp"

using namespace weyl;
using testutil::Rng;
using testutil::thrown_name;

TEST_CASE("rational construction stays canonical") {
    CHECK(rational_make(4, -6) == rational_make(-2, 3));
    CHECK(rational_make(0, 7) == 0);
    CHECK(rational_str(rational_make(-4, 6)) == "-2/3");
    CHECK(rational_str(rational_make(8, 2)) == "4");
    CHECK(rational_parse("-7/21") == rational_make(-1, 3));
    CHECK(rational_parse("15") == 15);
    CHECK(thrown_name([] { rational_parse("1/0"); }) == "zero_denominator");
    CHECK(thrown_name([] { rational_parse(""); }) == "parse");
    CHECK(thrown_name([] { rational_parse("3x"); }) == "parse");
    CHECK(rational_to_long(rational_make(12, 4)) == 3);
    CHECK(thrown_name([] { rational_to_long(rational_make(1, 2)); }) == "not_integer");
}

TEST_CASE("factorials and binomials, signed upper index included") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    // C(-1,k) = (-1)^k drives the descending Leibniz rule.
    for (unsigned long k = 0; k <= 6; ++k)
        CHECK(binomial_signed(-1, k) == ((k % 2 == 0) ? 1 : -1));
    CHECK(binomial_signed(-2, 3) == -4);
    CHECK(binomial_signed(-3, 2) == 6);
    CHECK(binomial_signed(4, 2) == 6);
    CHECK(binomial_signed(4, 6) == 0);
}

TEST_CASE("rational powers") {
    CHECK(rational_pow(rational_make(2, 3), -2) == rational_make(9, 4));
    CHECK(rational_pow(rational_make(-2, 1), 3) == -8);
    CHECK(rational_pow(Rational(0), 3) == 0);
    CHECK(rational_pow(Rational(5), 0) == 1);
    CHECK(thrown_name([] { rational_pow(Rational(0), -1); }) == "division_by_zero");
}

TEST_CASE("parameter polynomial ring basics") {
    ParamPoly a = ParamPoly::variable();
    CHECK((a + ParamPoly(1)) * (a - ParamPoly(1)) == a * a - ParamPoly(1));
    CHECK(a.degree() == 1);
    CHECK(ParamPoly().degree() == -1);
    CHECK(ParamPoly().is_zero());
    CHECK((a - a).is_zero());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(0).is_one());

    ParamPoly p(std::vector<Rational>{rational_make(1, 2), -1, 0, 2});
    CHECK(p.str() == "2*a^3 - a + 1/2");
    CHECK(p.str("t") == "2*t^3 - t + 1/2");
    CHECK(p.eval(2) == rational_make(29, 2));
    CHECK(p.lc() == 2);
    CHECK(p.coeff(1) == -1);
    CHECK(p.coeff(9) == 0);

    CHECK(ParamPoly(rational_make(3, 4)).as_rational() == rational_make(3, 4));
    CHECK(thrown_name([&] { (void)a.as_rational(); }) == "not_rational");
}

TEST_CASE("parameter polynomial division and gcd") {
    ParamPoly a = ParamPoly::variable();
    ParamPoly one(1);

    CHECK((a * a - one).divexact(a - one) == a + one);
    CHECK(thrown_name([&] { (a * a + one).divexact(a); }) == "inexact_division");
    CHECK(thrown_name([&] { a.divexact(ParamPoly()); }) == "division_by_zero");

    CHECK(ParamPoly::gcd((a + one) * (a + ParamPoly(2)), (a + one) * (a + ParamPoly(3))) ==
          a + one);
    CHECK(ParamPoly::gcd(ParamPoly(), ParamPoly()).is_zero());
    // gcd is monic even when the inputs are not.
    CHECK(ParamPoly::gcd(a * a * ParamPoly(2), a * a * ParamPoly(4)) == a * a);

    Rng rng(101);
    for (int t = 0; t < 60; ++t) {
        ParamPoly u = rng.poly(true), v = rng.poly(true);
        auto [q, r] = u.divmod(v);
        CHECK(q * v + r == u);
        CHECK(r.degree() < v.degree());
    }
}

TEST_CASE("fraction field arithmetic") {
    ParamPoly a = ParamPoly::variable();
    ParamPoly one(1);
    ParamRat f(one, a + one);
    ParamRat g(one, a - one);

    ParamRat sum = f + g;
    CHECK(sum == ParamRat(a + a, a * a - one));
    CHECK(f * g == ParamRat(one, a * a - one));
    CHECK(f - f == ParamRat(0L));
    CHECK((f / g) == ParamRat(a - one, a + one));
    CHECK(f.inv() == ParamRat(a + one));
    CHECK(f.inv().is_polynomial());
    CHECK_FALSE(f.is_polynomial());
    CHECK(ParamRat(a + a, ParamPoly(2)).is_polynomial()); // reduces to a

    CHECK(thrown_name([] { ParamRat(0L).inv(); }) == "division_by_zero");
    CHECK(thrown_name([] { ParamRat(ParamPoly(1), ParamPoly()); }) == "division_by_zero");
    CHECK(thrown_name([&] { f / ParamRat(0L); }) == "division_by_zero");
}

namespace {

Matrix random_matrix(Rng& rng, size_t rows, size_t cols, bool with_param) {
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            if (rng.pick(0, 2) != 0) m.at(r, c) = ParamRat(rng.poly(with_param));
    return m;
}

bool kernel_vector_works(const Matrix& m, const std::vector<ParamRat>& v) {
    for (size_t r = 0; r < m.rows(); ++r) {
        ParamRat dot;
        for (size_t c = 0; c < m.cols(); ++c) dot += m.at(r, c) * v[c];
        if (!dot.is_zero()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("echelon form, rank and kernel on fixed matrices") {
    Matrix m(2, 2);
    m.at(0, 0) = ParamRat(1L);
    m.at(0, 1) = ParamRat(2L);
    m.at(1, 0) = ParamRat(2L);
    m.at(1, 1) = ParamRat(4L);
    CHECK(rank(m) == 1);

    auto ker = nullspace(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == ParamRat(1L)); // first nonzero coordinate normalized
    CHECK(kernel_vector_works(m, ker[0]));

    Matrix id(3, 3);
    for (size_t k = 0; k < 3; ++k) id.at(k, k) = ParamRat(1L);
    CHECK(rank(id) == 3);
    CHECK(nullspace(id).empty());
}

TEST_CASE("kernel over the parameter field") {
    // rows (1, a) and (a, a^2) are proportional, so the kernel is a line.
    ParamPoly a = ParamPoly::variable();
    Matrix m(2, 2);
    m.at(0, 0) = ParamRat(1L);
    m.at(0, 1) = ParamRat(a);
    m.at(1, 0) = ParamRat(a);
    m.at(1, 1) = ParamRat(a * a);
    CHECK(rank(m) == 1);
    auto ker = nullspace(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == ParamRat(1L));
    CHECK(kernel_vector_works(m, ker[0]));
}

TEST_CASE("random kernels annihilate their matrices") {
    Rng rng(202);
    for (int t = 0; t < 30; ++t) {
        Matrix m = random_matrix(rng, 4, 6, t % 3 == 0);
        Matrix copy = m;
        auto pivots = rref(copy);
        for (size_t k = 1; k < pivots.size(); ++k) CHECK(pivots[k - 1] < pivots[k]);

        size_t rk = rank(m);
        CHECK(rk == pivots.size());
        auto ker = nullspace(m);
        CHECK(rk + ker.size() == m.cols());
        for (const auto& v : ker) {
            REQUIRE(v.size() == m.cols());
            CHECK(kernel_vector_works(m, v));
        }
    }
}
