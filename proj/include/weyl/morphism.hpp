#pragma once

#include <string>
#include <vector>

#include "weyl/polygon.hpp"

namespace weyl {

/// Elementary generator of Aut(A1):
///   Phi(n, l):  x -> x + l*D^n,  D -> D
///   PhiP(n, l): D -> D + l*x^n,  x -> x
///   Lin(a,b,c,d): D -> a*D + b*x, x -> c*D + d*x with a*d - b*c = 1
struct TameGen {
    enum class Kind { Phi, PhiPrime, Linear };
    Kind kind;
    long n = 0;
    Rational lambda;
    Rational a, b, c, d;

    static TameGen phi(long n, const Rational& lambda);
    static TameGen phi_prime(long n, const Rational& lambda);
    static TameGen linear(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& d);

    TameGen inverse() const;
    WeylOp img_x() const;
    WeylOp img_d() const;
    std::string str() const;
};

/// Word of generators, applied left to right: [g1, g2] acts as g2 after g1.
using TameWord = std::vector<TameGen>;

/// `Phi(n,l);PhiP(n,l);Lin(a,b,c,d)` with exact rationals; empty = identity.
TameWord word_parse(const std::string& text);
std::string word_str(const TameWord& w);
TameWord word_inverse(const TameWord& w);

/// A pair of images (phi(D), phi(x)). endo_certified records a verified
/// [img_d, img_x] = 1; uncertified substitutions are first-class so that
/// monomial-top maps outside the endomorphism world stay expressible.
struct Substitution {
    WeylOp img_d, img_x;
    bool endo_certified = false;
};

Substitution identity_sub();
Substitution gen_to_sub(const TameGen& g);
Substitution word_to_sub(const TameWord& w);

/// Evaluate: x^i D^j |-> img_x^i * img_d^j (x-powers on the left).
WeylOp apply(const Substitution& s, const WeylOp& p);

/// s1 after s2: images of s2 pushed through s1.
Substitution compose(const Substitution& s1, const Substitution& s2);

/// [img_d, img_x] = 1; certifies s on success.
bool is_endomorphism(Substitution& s);

/// Rate epsilon with (l',k') = epsilon*(l,k) for the monomial tops
/// x^l D^k of img_d and x^l' D^k' of img_x; needs l,k >= 1.
Rational epsilon_rate(const Substitution& s, const WeightVec& w);

/// Least p >= 1 making (p*eps, p) integral, as a weight vector.
WeightVec rate_weight(const Rational& eps);

/// Monomial-top propagation: predicted (k + eps*l)*v(P) against the actual
/// weight degree of the image. Requires w = (p*eps, p) and a monomial-top,
/// nonconstant P.
struct PropagationCheck {
    Rational predicted, actual;
    bool image_monomial;
};
PropagationCheck weight_propagation_check(const Substitution& s, const WeylOp& p,
                                          const WeightVec& w);

/// Kill the top of img_x by subtracting beta * img_d^e where e is the
/// integral ratio of the two weight degrees; img_d is untouched and the
/// x-image strictly drops in weight.
Substitution reduce_by_power(const Substitution& s,
                             const WeightVec& w = WeightVec(1, 1));

/// Drive a substitution toward rectangular images by composing tame
/// generators (or conjugating, in conjugation mode). Each step kills an
/// axis vertex of the driven image along its top line and strictly lowers
/// max_i + max_j of that image.
enum class RectStatus { Rectangular, TameExhausted, StepLimit, IrrationalRoot };

struct RectStep {
    char case_label;     // 'b' flatten, 'c' verticalize, 'd' shared edge
    Rational sigma, rho; // top-line normal driving the move
    Rational mu;
    TameGen gen;
    long measure_before, measure_after;
    char driven; // 'D' or 'x'
};

struct RectResult {
    TameWord word;
    Substitution s_out;
    RectStatus status;
    std::vector<RectStep> log;
};

RectResult rectangularize(const Substitution& s, long max_steps,
                          bool conjugation = false);

/// Polygon facts every tame automorphism's D-image must satisfy: axis
/// extremes present and exclusive, one of m/n or n/m integral, and no
/// rectangular corner. Degenerate axes (m = 0 or n = 0) waive the clauses
/// that mention them.
struct PolygonCheckReport {
    long m = 0, n = 0; // max x-exponent, max D-exponent of the D-image
    bool axis_points = false;
    bool extremal_exclusion = false;
    bool divisibility = false;
    bool not_rectangular = false;
    bool pass() const {
        return axis_points && extremal_exclusion && divisibility && not_rectangular;
    }
};
PolygonCheckReport automorphism_polygon_check(const TameWord& w);

} // namespace weyl
