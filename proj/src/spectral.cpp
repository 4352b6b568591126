#include "weyl/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "weyl/linalg.hpp"
#include "weyl/parser.hpp"

namespace weyl {

namespace {

bool has_positive_order(const WeylOp& p) { return !p.is_zero() && p.max_j() > 0; }

/// lambda with mult = lambda * base, when the supports line up.
std::optional<ParamRat> weyl_ratio(const WeylOp& base, const WeylOp& mult) {
    if (base.is_zero()) return std::nullopt;
    if (mult.is_zero()) return ParamRat(0L);
    if (base.term_count() != mult.term_count()) return std::nullopt;
    auto itb = base.terms().begin();
    auto itm = mult.terms().begin();
    ParamRat lambda(itm->second, itb->second);
    for (; itb != base.terms().end(); ++itb, ++itm) {
        if (itb->first != itm->first) return std::nullopt;
        if (!(ParamRat(itm->second, itb->second) == lambda)) return std::nullopt;
    }
    return lambda;
}

} // namespace

SolutionPair make_solution_pair(const WeylOp& p, const WeylOp& q, const BiPoly& relation) {
    if (relation.is_zero())
        throw domain_error("trivial_relation", "the zero relation carries no curve");
    if (!has_positive_order(p) && !has_positive_order(q))
        throw domain_error("constant_pair", "neither operator has positive order");
    if (!eval_poly(relation, p, q).is_zero())
        throw domain_error("relation_violated", "the pair does not satisfy the relation");
    return {p, q, relation};
}

SolutionPair dixmier_pair() {
    WeylOp x = WeylOp::x();
    WeylOp d = WeylOp::d();
    WeylOp w = d * d - x.pow(3) + WeylOp::parameter();
    WeylOp p = w * w - x.scaled(ParamPoly(2));
    WeylOp q = w.pow(3) - (x * w + w * x).scaled(ParamPoly(Rational(3, 2)));
    BiPoly rel = BiPoly::term(0, 2, ParamPoly(1)) - BiPoly::term(3, 0, ParamPoly(1)) +
                 BiPoly(ParamPoly::variable());
    return make_solution_pair(p, q, rel);
}

SolutionPair dixmier_pair_at(const Rational& alpha) {
    SolutionPair sym = dixmier_pair();
    BiPoly rel = BiPoly::term(0, 2, ParamPoly(1)) - BiPoly::term(3, 0, ParamPoly(1)) +
                 BiPoly(ParamPoly(alpha));
    return make_solution_pair(sym.p.specialize(alpha), sym.q.specialize(alpha), rel);
}

void commutation_check(const SolutionPair& sp) {
    if (!eval_poly(sp.relation, sp.p, sp.q).is_zero())
        throw std::logic_error("solution pair lost its defining relation");
    if (!commutator(sp.p, sp.q).is_zero())
        throw std::logic_error("solution pair stopped commuting");
}

std::vector<BiPoly> find_relation(const WeylOp& p, const WeylOp& q, long deg_x, long deg_y) {
    if (deg_x < 0 || deg_y < 0)
        throw domain_error("bad_degree", "degree bounds must be >= 0");
    if ((deg_x + 1) * (deg_y + 1) > 256)
        throw domain_error("size_limit", "relation search box too large");

    std::vector<Monomial> cols;
    for (long i = 0; i <= deg_x; ++i)
        for (long j = 0; j <= deg_y; ++j) cols.push_back({i, j});
    std::sort(cols.begin(), cols.end(), [](const Monomial& l, const Monomial& r) {
        return std::pair(l.i + l.j, l.i) < std::pair(r.i + r.j, r.i);
    });

    std::vector<WeylOp> pp{WeylOp(1)}, qp{WeylOp(1)};
    for (long i = 1; i <= deg_x; ++i) pp.push_back(pp.back() * p);
    for (long j = 1; j <= deg_y; ++j) qp.push_back(qp.back() * q);

    std::vector<WeylOp> prods;
    prods.reserve(cols.size());
    std::map<Monomial, size_t> row_of;
    for (const auto& c : cols) {
        prods.push_back(pp[c.i] * qp[c.j]);
        for (const auto& [mon, v] : prods.back().terms()) row_of.emplace(mon, 0);
    }
    size_t r = 0;
    for (auto& [mon, row] : row_of) row = r++;

    Matrix m(row_of.size(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [mon, v] : prods[c].terms()) m.at(row_of[mon], c) = ParamRat(v);

    std::vector<BiPoly> basis;
    for (const auto& vec : nullspace(std::move(m))) {
        ParamPoly lcm_den(1);
        for (const auto& e : vec)
            if (!e.is_zero())
                lcm_den = (lcm_den * e.den()).divexact(ParamPoly::gcd(lcm_den, e.den()));
        std::vector<ParamPoly> w(vec.size());
        ParamPoly content;
        for (size_t k = 0; k < vec.size(); ++k) {
            if (vec[k].is_zero()) continue;
            w[k] = vec[k].num() * lcm_den.divexact(vec[k].den());
            content = ParamPoly::gcd(content, w[k]);
        }
        Rational scale(1);
        BiPoly rel;
        for (size_t k = 0; k < vec.size(); ++k) {
            if (w[k].is_zero()) continue;
            w[k] = w[k].divexact(content);
            if (rel.is_zero()) scale = Rational(1) / w[k].lc();
            rel.add_term(cols[k].i, cols[k].j, w[k] * ParamPoly(scale));
        }
        basis.push_back(rel);
    }
    return basis;
}

SpaceProbeReport space_probes(const WeylOp& p, const WeylOp& q, long bound) {
    if (bound < 1) throw domain_error("bad_bound", "bound must be >= 1");
    std::vector<WeylOp> chain{q};
    for (long k = 0; k < bound && !chain.back().is_zero(); ++k)
        chain.push_back(commutator(p, chain.back()));

    SpaceProbeReport rep;
    if (chain.back().is_zero()) {
        rep.nilpotent = true;
        rep.nilpotency = static_cast<long>(chain.size()) - 1;
    }
    WeylOp bracket = chain.size() > 1 ? chain[1] : WeylOp();
    rep.central = bracket.is_zero();
    if (auto lambda = weyl_ratio(q, bracket)) {
        rep.has_eigen = true;
        rep.eigenvalue = *lambda;
    }

    std::map<Monomial, size_t> row_of;
    std::vector<const WeylOp*> vecs;
    for (const auto& a : chain)
        if (!a.is_zero()) {
            vecs.push_back(&a);
            for (const auto& [mon, v] : a.terms()) row_of.emplace(mon, 0);
        }
    size_t r = 0;
    for (auto& [mon, row] : row_of) row = r++;
    auto rank_of = [&](size_t count) {
        if (count == 0 || row_of.empty()) return size_t{0};
        Matrix m(row_of.size(), count);
        for (size_t c = 0; c < count; ++c)
            for (const auto& [mon, v] : vecs[c]->terms()) m.at(row_of[mon], c) = ParamRat(v);
        return rank(std::move(m));
    };
    rep.span_rank = static_cast<long>(rank_of(vecs.size()));
    if (rep.nilpotent)
        rep.stabilized = true;
    else
        rep.stabilized = rank_of(vecs.size() - 1) == static_cast<size_t>(rep.span_rank);
    return rep;
}

RingRankReport ring_rank(const std::vector<WeylOp>& gens, long bound) {
    if (bound < 1) throw domain_error("bad_bound", "bound must be >= 1");
    if (gens.empty()) throw domain_error("zero_operator", "no generators");
    std::vector<long> orders;
    for (const auto& g : gens) orders.push_back(ord(g));

    std::vector<char> reach(bound + 1, 0);
    reach[0] = 1;
    for (long o : orders) {
        if (o < 1) continue;
        for (long s = o; s <= bound; ++s) reach[s] |= reach[s - o];
    }
    auto gcd_to = [&](long hi) {
        long g = 0;
        for (long s = 1; s <= hi; ++s)
            if (reach[s]) g = std::gcd(g, s);
        return g;
    };
    RingRankReport rep;
    rep.rank = gcd_to(bound);
    rep.stabilized = rep.rank != 0 && rep.rank == gcd_to(bound - 1);
    return rep;
}

OrbitReport orbit_search(const SolutionPair& start, const std::vector<TameGen>& gens,
                         long depth, long budget) {
    if (depth < 0) throw domain_error("bad_bound", "depth must be >= 0");
    if (budget < 1) throw domain_error("bad_bound", "budget must be >= 1");
    commutation_check(start);

    std::vector<Substitution> subs;
    subs.reserve(gens.size());
    for (const auto& g : gens) subs.push_back(gen_to_sub(g));

    struct Node {
        WeylOp p, q;
        std::string word;
    };
    auto key_of = [](const WeylOp& p, const WeylOp& q) {
        return render_operator(p) + " | " + render_operator(q);
    };

    OrbitReport rep;
    std::unordered_map<std::string, std::string> seen;
    seen.emplace(key_of(start.p, start.q), "");
    rep.distinct = 1;
    std::vector<Node> frontier{{start.p, start.q, ""}};

    struct Child {
        WeylOp p, q;
        std::string key, word;
        bool bad = false;
    };
    for (long level = 1; level <= depth && !frontier.empty() && !subs.empty(); ++level) {
        long jobs = static_cast<long>(frontier.size() * subs.size());
        std::vector<Child> children(jobs);
        // Independent expansions; the dedup below stays in queue order, so
        // the report does not depend on the thread count.
#pragma omp parallel for schedule(dynamic)
        for (long idx = 0; idx < jobs; ++idx) {
            const Node& nd = frontier[idx / subs.size()];
            size_t gi = idx % subs.size();
            Child& ch = children[idx];
            ch.p = apply(subs[gi], nd.p);
            ch.q = apply(subs[gi], nd.q);
            ch.key = key_of(ch.p, ch.q);
            ch.word = nd.word.empty() ? gens[gi].str() : nd.word + ";" + gens[gi].str();
            ch.bad = !eval_poly(start.relation, ch.p, ch.q).is_zero() ||
                     !commutator(ch.p, ch.q).is_zero();
        }
        for (const auto& ch : children)
            if (ch.bad) throw std::logic_error("orbit image broke the pair invariant");

        std::vector<Node> next;
        bool full = false;
        for (auto& ch : children) {
            auto [it, fresh] = seen.emplace(ch.key, ch.word);
            if (!fresh) {
                ++rep.collision_count;
                if (rep.collisions.size() < 8)
                    rep.collisions.push_back({it->second, ch.word});
                continue;
            }
            if (rep.distinct == budget) {
                seen.erase(it);
                full = true;
                break;
            }
            ++rep.distinct;
            next.push_back({std::move(ch.p), std::move(ch.q), std::move(ch.word)});
        }
        if (full) {
            rep.budget_exceeded = true;
            break;
        }
        rep.explored_depth = level;
        frontier = std::move(next);
    }
    return rep;
}

} // namespace weyl
