#include "weyl/morphism.hpp"

#include <sstream>

namespace weyl {

TameGen TameGen::phi(long n, const Rational& lambda) {
    if (n < 0) throw domain_error("negative_exponent", "Phi needs n >= 0");
    TameGen g;
    g.kind = Kind::Phi;
    g.n = n;
    g.lambda = lambda;
    return g;
}

TameGen TameGen::phi_prime(long n, const Rational& lambda) {
    if (n < 0) throw domain_error("negative_exponent", "PhiP needs n >= 0");
    TameGen g;
    g.kind = Kind::PhiPrime;
    g.n = n;
    g.lambda = lambda;
    return g;
}

TameGen TameGen::linear(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) {
    if (a * d - b * c != 1)
        throw domain_error("not_unimodular", "Lin(a,b,c,d) needs a*d - b*c = 1");
    TameGen g;
    g.kind = Kind::Linear;
    g.a = a;
    g.b = b;
    g.c = c;
    g.d = d;
    return g;
}

TameGen TameGen::inverse() const {
    switch (kind) {
    case Kind::Phi: return phi(n, -lambda);
    case Kind::PhiPrime: return phi_prime(n, -lambda);
    case Kind::Linear: return linear(d, -b, -c, a);
    }
    throw std::logic_error("unreachable");
}

WeylOp TameGen::img_x() const {
    switch (kind) {
    case Kind::Phi: return WeylOp::x() + WeylOp::term(0, n, ParamPoly(lambda));
    case Kind::PhiPrime: return WeylOp::x();
    case Kind::Linear:
        return WeylOp::d().scaled(ParamPoly(c)) + WeylOp::x().scaled(ParamPoly(d));
    }
    throw std::logic_error("unreachable");
}

WeylOp TameGen::img_d() const {
    switch (kind) {
    case Kind::Phi: return WeylOp::d();
    case Kind::PhiPrime: return WeylOp::d() + WeylOp::term(n, 0, ParamPoly(lambda));
    case Kind::Linear:
        return WeylOp::d().scaled(ParamPoly(a)) + WeylOp::x().scaled(ParamPoly(b));
    }
    throw std::logic_error("unreachable");
}

std::string TameGen::str() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Phi:
        os << "Phi(" << n << "," << rational_str(lambda) << ")";
        break;
    case Kind::PhiPrime:
        os << "PhiP(" << n << "," << rational_str(lambda) << ")";
        break;
    case Kind::Linear:
        os << "Lin(" << rational_str(a) << "," << rational_str(b) << ","
           << rational_str(c) << "," << rational_str(d) << ")";
        break;
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::string next_token(const std::string& s, size_t& pos, char stop1, char stop2) {
    size_t start = pos;
    while (pos < s.size() && s[pos] != stop1 && s[pos] != stop2) ++pos;
    return s.substr(start, pos - start);
}

} // namespace

TameWord word_parse(const std::string& text) {
    TameWord w;
    size_t pos = 0;
    skip_ws(text, pos);
    while (pos < text.size()) {
        std::string name = next_token(text, pos, '(', ';');
        // trim trailing blanks of the name
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        if (pos >= text.size() || text[pos] != '(')
            throw domain_error("word_syntax", "expected '(' after generator name");
        ++pos;
        std::vector<std::string> args;
        while (true) {
            std::string arg = next_token(text, pos, ',', ')');
            args.push_back(arg);
            if (pos >= text.size())
                throw domain_error("word_syntax", "unterminated generator argument list");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            ++pos; // comma
        }
        auto nat_arg = [&](const std::string& a) {
            Rational r = rational_parse(a);
            if (!rational_is_integer(r) || r < 0)
                throw domain_error("word_syntax", "generator exponent must be a natural number");
            return rational_to_long(r);
        };
        if (name == "Phi" && args.size() == 2)
            w.push_back(TameGen::phi(nat_arg(args[0]), rational_parse(args[1])));
        else if (name == "PhiP" && args.size() == 2)
            w.push_back(TameGen::phi_prime(nat_arg(args[0]), rational_parse(args[1])));
        else if (name == "Lin" && args.size() == 4)
            w.push_back(TameGen::linear(rational_parse(args[0]), rational_parse(args[1]),
                                        rational_parse(args[2]), rational_parse(args[3])));
        else
            throw domain_error("word_syntax", "unknown generator '" + name + "'");
        skip_ws(text, pos);
        if (pos < text.size()) {
            if (text[pos] != ';')
                throw domain_error("word_syntax", "expected ';' between generators");
            ++pos;
            skip_ws(text, pos);
        }
    }
    return w;
}

std::string word_str(const TameWord& w) {
    std::string out;
    for (size_t t = 0; t < w.size(); ++t) {
        if (t) out += ";";
        out += w[t].str();
    }
    return out;
}

TameWord word_inverse(const TameWord& w) {
    TameWord inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(it->inverse());
    return inv;
}

Substitution identity_sub() {
    return Substitution{WeylOp::d(), WeylOp::x(), true};
}

Substitution gen_to_sub(const TameGen& g) {
    return Substitution{g.img_d(), g.img_x(), true};
}

Substitution word_to_sub(const TameWord& w) {
    Substitution s = identity_sub();
    for (auto& g : w) s = compose(gen_to_sub(g), s);
    return s;
}

WeylOp apply(const Substitution& s, const WeylOp& p) {
    long mi = p.max_i(), mj = p.max_j();
    std::vector<WeylOp> xpow(mi + 1), dpow(mj + 1);
    xpow[0] = WeylOp(1);
    for (long k = 1; k <= mi; ++k) xpow[k] = xpow[k - 1] * s.img_x;
    dpow[0] = WeylOp(1);
    for (long k = 1; k <= mj; ++k) dpow[k] = dpow[k - 1] * s.img_d;
    WeylOp out;
    for (auto& [m, c] : p.terms()) out += (xpow[m.i] * dpow[m.j]).scaled(c);
    return out;
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
    return Substitution{apply(s1, s2.img_d), apply(s1, s2.img_x),
                        s1.endo_certified && s2.endo_certified};
}

bool is_endomorphism(Substitution& s) {
    bool ok = commutator(s.img_d, s.img_x) == WeylOp(1);
    if (ok) s.endo_certified = true;
    return ok;
}

namespace {

Monomial monomial_top(const WeylOp& p, const WeightVec& w, const char* who) {
    BiPoly f = hom_part(p, w);
    if (!f.is_monomial())
        throw domain_error("non_monomial_top",
                           std::string(who) + " does not have a monomial top");
    return f.terms().begin()->first;
}

} // namespace

Rational epsilon_rate(const Substitution& s, const WeightVec& w) {
    Monomial dk = monomial_top(s.img_d, w, "img_d");
    Monomial xk = monomial_top(s.img_x, w, "img_x");
    if (dk.i < 1 || dk.j < 1)
        throw domain_error("non_mixture_top", "img_d top must be x^l D^k with l,k >= 1");
    Rational eps = Rational(xk.i) / Rational(dk.i);
    if (Rational(xk.j) != eps * Rational(dk.j))
        throw domain_error("rate_mismatch", "image tops are not proportional exponent pairs");
    return eps;
}

WeightVec rate_weight(const Rational& eps) {
    Integer den = eps.get_den();
    long p = static_cast<long>(den.get_si());
    return WeightVec(eps * p, Rational(p));
}

PropagationCheck weight_propagation_check(const Substitution& s, const WeylOp& p,
                                          const WeightVec& w) {
    Rational eps = epsilon_rate(s, w);
    if (w.rho <= 0 || !rational_is_integer(w.rho) || w.sigma != eps * w.rho ||
        !rational_is_integer(w.sigma))
        throw domain_error("weight_rate_mismatch",
                           "weight must be (p*eps, p) with positive integer entries");
    if (p.term_count() == 1 && p.terms().begin()->first == Monomial{0, 0})
        throw domain_error("constant_operand", "propagation needs a nonconstant operator");
    Monomial dk = monomial_top(s.img_d, w, "img_d");
    monomial_top(p, w, "P");
    Rational factor = Rational(dk.j) + eps * Rational(dk.i);
    WeylOp image = apply(s, p);
    PropagationCheck out{factor * weight_degree(p, w), weight_degree(image, w),
                         is_monomial_type(image, w)};
    return out;
}

Substitution reduce_by_power(const Substitution& s, const WeightVec& w) {
    BiPoly f = hom_part(s.img_d, w);
    BiPoly g = hom_part(s.img_x, w);
    Rational v = weight_degree(s.img_d, w);
    Rational vx = weight_degree(s.img_x, w);
    if (v <= 0)
        throw domain_error("exponent_not_integral", "img_d weight degree must be positive");
    Rational e = vx / v;
    if (!rational_is_integer(e) || e < 0)
        throw domain_error("exponent_not_integral",
                           "weight-degree ratio " + rational_str(e) + " is not a natural number");
    unsigned long ee = static_cast<unsigned long>(rational_to_long(e));
    auto beta = proportional(f.pow(ee), g);
    if (!beta || !beta->is_polynomial())
        throw domain_error("no_cancel", "x-image top is not a scalar multiple of the D-image power");
    Substitution out = s;
    out.img_x = s.img_x - s.img_d.pow(ee).scaled(beta->num());
    out.endo_certified = s.endo_certified;
    if (!out.img_x.is_zero() && !(weight_degree(out.img_x, w) < vx))
        throw std::logic_error("reduce_by_power did not lower the weight degree");
    return out;
}

PolygonCheckReport automorphism_polygon_check(const TameWord& w) {
    Substitution s = word_to_sub(w);
    const WeylOp& pd = s.img_d;
    PolygonCheckReport rep;
    rep.m = pd.max_i();
    rep.n = pd.max_j();

    bool axis_m = rep.m == 0 || !pd.coeff(rep.m, 0).is_zero();
    bool axis_n = rep.n == 0 || !pd.coeff(0, rep.n).is_zero();
    rep.axis_points = axis_m && axis_n;

    bool excl = true;
    for (auto& [mono, c] : pd.terms()) {
        if (rep.n >= 1 && mono.j == rep.n && mono.i > 0) excl = false;
        if (rep.m >= 1 && mono.i == rep.m && mono.j > 0) excl = false;
    }
    rep.extremal_exclusion = excl;

    rep.divisibility = rep.m == 0 || rep.n == 0 || rep.m % rep.n == 0 || rep.n % rep.m == 0;
    rep.not_rectangular = !is_rectangular(pd).has_value();
    return rep;
}

} // namespace weyl
