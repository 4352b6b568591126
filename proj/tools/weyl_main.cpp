#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "weyl/json_io.hpp"
#include "weyl/morphism.hpp"
#include "weyl/parser.hpp"
#include "weyl/polygon.hpp"
#include "weyl/psido.hpp"
#include "weyl/spectral.hpp"

namespace {

using namespace weyl;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string point_str(const Monomial& m) {
    return "(" + std::to_string(m.i) + "," + std::to_string(m.j) + ")";
}

Json json_points(const std::vector<Monomial>& pts) {
    Json arr = Json::array();
    for (const auto& m : pts) arr.push_back({m.i, m.j});
    return arr;
}

std::string word_or_identity(const std::string& w) { return w.empty() ? "(identity)" : w; }

const char* status_str(RectStatus s) {
    switch (s) {
        case RectStatus::Rectangular: return "Rectangular";
        case RectStatus::TameExhausted: return "TameExhausted";
        case RectStatus::StepLimit: return "StepLimit";
        case RectStatus::IrrationalRoot: return "IrrationalRoot";
    }
    return "?";
}

std::string index_str(AcIndexReport::Status st, long value) {
    switch (st) {
        case AcIndexReport::Status::Found: return std::to_string(value);
        case AcIndexReport::Status::Vanished: return "vanished";
        case AcIndexReport::Status::BoundExceeded: return "not found within bound";
    }
    return "?";
}

Json json_index(AcIndexReport::Status st, long value) {
    switch (st) {
        case AcIndexReport::Status::Found: return value;
        case AcIndexReport::Status::Vanished: return "vanished";
        case AcIndexReport::Status::BoundExceeded: return "bound_exceeded";
    }
    return nullptr;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for the first Weyl algebra K[a][x][D]"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string expr, expr2, sigma = "1", rho = "1", alpha, word1, word2, gens_arg;
    long bound = 0, max_steps = 32, n_ord = 8, m_ord = 8, deg_x = 3, deg_y = 2;
    long depth = 2, budget = 512;
    bool conjugate = false;

    auto* c_norm = app.add_subcommand("normalize", "parse and print the normal form");
    c_norm->add_option("expr", expr)->required();
    c_norm->callback([&] {
        WeylOp p = parse_operator(expr);
        if (json)
            emit({{"normal_form", render_operator(p)}, {"operator", json_weyl(p)}});
        else
            std::cout << render_operator(p) << "\n";
    });

    auto* c_mul = app.add_subcommand("mul", "product of two operators");
    c_mul->add_option("left", expr)->required();
    c_mul->add_option("right", expr2)->required();
    c_mul->callback([&] {
        WeylOp p = parse_operator(expr) * parse_operator(expr2);
        if (json)
            emit({{"product", render_operator(p)}, {"operator", json_weyl(p)}});
        else
            std::cout << render_operator(p) << "\n";
    });

    auto* c_comm = app.add_subcommand("comm", "commutator [P, Q]");
    c_comm->add_option("left", expr)->required();
    c_comm->add_option("right", expr2)->required();
    c_comm->callback([&] {
        WeylOp p = commutator(parse_operator(expr), parse_operator(expr2));
        if (json)
            emit({{"commutator", render_operator(p)}, {"operator", json_weyl(p)}});
        else
            std::cout << render_operator(p) << "\n";
    });

    auto* c_ord = app.add_subcommand("ord", "order in D and degree in x");
    c_ord->add_option("expr", expr)->required();
    c_ord->callback([&] {
        WeylOp p = parse_operator(expr);
        long o = ord(p), ox = ord_x(p);
        if (json)
            emit({{"ord", o}, {"ord_x", ox}});
        else
            std::cout << "ord = " << o << "\nord_x = " << ox << "\n";
    });

    auto* c_poly = app.add_subcommand("polygon", "Newton polygon and weighted top line");
    c_poly->add_option("expr", expr)->required();
    c_poly->add_option("--sigma", sigma, "x-weight (rational)");
    c_poly->add_option("--rho", rho, "D-weight (rational)");
    c_poly->callback([&] {
        WeylOp p = parse_operator(expr);
        auto hull = newton_polygon(p);
        WeightVec w{rational_parse(sigma), rational_parse(rho)};
        TopLine line = top_line(p, w);
        if (json) {
            emit({{"vertices", json_points(hull)},
                  {"sigma", rational_str(w.sigma)},
                  {"rho", rational_str(w.rho)},
                  {"theta", rational_str(line.theta)},
                  {"top_points", json_points(line.points)}});
            return;
        }
        std::cout << "vertices:";
        for (const auto& m : hull) std::cout << " " << point_str(m);
        std::cout << "\ntop-line: " << rational_str(w.sigma) << "*i + " << rational_str(w.rho)
                  << "*j = " << rational_str(line.theta) << "\npoints:";
        for (const auto& m : line.points) std::cout << " " << point_str(m);
        std::cout << "\n";
    });

    auto* c_hom = app.add_subcommand("hom-part", "weighted top homogeneous part");
    c_hom->add_option("expr", expr)->required();
    c_hom->add_option("--sigma", sigma, "x-weight (rational)");
    c_hom->add_option("--rho", rho, "D-weight (rational)");
    c_hom->callback([&] {
        WeylOp p = parse_operator(expr);
        WeightVec w{rational_parse(sigma), rational_parse(rho)};
        BiPoly f = hom_part(p, w);
        Rational theta = weight_degree(p, w);
        if (json)
            emit({{"hom_part", render_bipoly(f)},
                  {"theta", rational_str(theta)},
                  {"poly", json_bipoly(f)}});
        else
            std::cout << render_bipoly(f) << "\ntheta = " << rational_str(theta) << "\n";
    });

    auto* c_ac = app.add_subcommand("almost-commute",
                                    "weighted decomposition of [P, Q] and first indices");
    c_ac->add_option("left", expr)->required();
    c_ac->add_option("right", expr2)->required();
    c_ac->add_option("--sigma", sigma, "x-weight (rational)");
    c_ac->add_option("--rho", rho, "D-weight (rational)");
    c_ac->add_option("--bound", bound, "also scan bracket powers up to this bound");
    c_ac->callback([&] {
        WeylOp p = parse_operator(expr), q = parse_operator(expr2);
        WeightVec w{rational_parse(sigma), rational_parse(rho)};
        CommDecomposition dec = commutator_decomposition(p, q, w);
        Json out{{"T", render_operator(dec.T)},
                 {"U", render_operator(dec.U)},
                 {"level", rational_str(dec.level)},
                 {"almost_commute", dec.T.is_zero()}};
        if (!json)
            std::cout << "T = " << render_operator(dec.T) << "\nU = " << render_operator(dec.U)
                      << "\nlevel = " << rational_str(dec.level)
                      << "\nalmost-commute: " << (dec.T.is_zero() ? "yes" : "no") << "\n";
        if (bound > 0) {
            AcIndexReport rep = almost_commute_index(p, q, w, bound);
            out["n"] = json_index(rep.n_status, rep.n);
            out["m"] = json_index(rep.m_status, rep.m);
            if (!json)
                std::cout << "n = " << index_str(rep.n_status, rep.n)
                          << "\nm = " << index_str(rep.m_status, rep.m) << "\n";
        }
        if (json) emit(out);
    });

    auto* c_apply = app.add_subcommand("apply", "apply a tame word to an operator");
    c_apply->add_option("word", word1, "e.g. \"Phi(2,1);Lin(0,1,-1,0)\"")->required();
    c_apply->add_option("expr", expr)->required();
    c_apply->callback([&] {
        Substitution s = word_to_sub(word_parse(word1));
        WeylOp img = apply(s, parse_operator(expr));
        if (json)
            emit({{"image", render_operator(img)}, {"operator", json_weyl(img)}});
        else
            std::cout << render_operator(img) << "\n";
    });

    auto* c_compose = app.add_subcommand("compose", "compose two tame words");
    c_compose->add_option("outer", word1)->required();
    c_compose->add_option("inner", word2)->required();
    c_compose->callback([&] {
        Substitution s = compose(word_to_sub(word_parse(word1)), word_to_sub(word_parse(word2)));
        if (json)
            emit({{"img_d", render_operator(s.img_d)}, {"img_x", render_operator(s.img_x)}});
        else
            std::cout << "D -> " << render_operator(s.img_d) << "\nx -> "
                      << render_operator(s.img_x) << "\n";
    });

    auto* c_rect = app.add_subcommand("rectangularize",
                                      "drive images toward a rectangular top");
    c_rect->add_option("dimg", expr, "image of D")->required();
    c_rect->add_option("ximg", expr2, "image of x (default x)");
    c_rect->add_option("--max-steps", max_steps);
    c_rect->add_flag("--conjugate", conjugate, "conjugate instead of post-composing");
    c_rect->callback([&] {
        Substitution s{parse_operator(expr),
                       expr2.empty() ? WeylOp::x() : parse_operator(expr2), false};
        RectResult res = rectangularize(s, max_steps, conjugate);
        if (json) {
            Json steps = Json::array();
            for (const auto& st : res.log)
                steps.push_back({{"case", std::string(1, st.case_label)},
                                 {"gen", st.gen.str()},
                                 {"mu", rational_str(st.mu)},
                                 {"sigma", rational_str(st.sigma)},
                                 {"rho", rational_str(st.rho)},
                                 {"driven", std::string(1, st.driven)},
                                 {"measure_before", st.measure_before},
                                 {"measure_after", st.measure_after}});
            emit({{"status", status_str(res.status)},
                  {"word", word_str(res.word)},
                  {"img_d", render_operator(res.s_out.img_d)},
                  {"img_x", render_operator(res.s_out.img_x)},
                  {"steps", steps}});
            return;
        }
        long k = 0;
        for (const auto& st : res.log)
            std::cout << "step " << ++k << ": case " << st.case_label << " gen=" << st.gen.str()
                      << " mu=" << rational_str(st.mu) << " weights=(" << rational_str(st.sigma)
                      << "," << rational_str(st.rho) << ") driven=" << st.driven << " measure "
                      << st.measure_before << " -> " << st.measure_after << "\n";
        std::cout << "status: " << status_str(res.status)
                  << "\nword: " << word_or_identity(word_str(res.word)) << "\nD -> "
                  << render_operator(res.s_out.img_d) << "\nx -> "
                  << render_operator(res.s_out.img_x) << "\n";
    });

    auto* c_schur = app.add_subcommand("schur", "normalize to c*D^q by a gauge series");
    c_schur->add_option("expr", expr)->required();
    c_schur->add_option("--N", n_ord, "tail depth in D^-1");
    c_schur->add_option("--M", m_ord, "x-truncation of the output");
    c_schur->callback([&] {
        WeylOp q = parse_operator(expr);
        SchurResult sr = schur_normalize(q, n_ord, m_ord);
        PsiDO rsd = schur_residual(q, sr);
        bool clean = rsd.is_zero();
        if (json) {
            emit({{"c", rational_str(sr.c)},
                  {"q", sr.q},
                  {"S", render_psido(sr.S)},
                  {"S_terms", json_psido(sr.S)},
                  {"residual_zero", clean}});
            return;
        }
        std::cout << "c = " << rational_str(sr.c) << "\nq = " << sr.q
                  << "\nS = " << render_psido(sr.S) << "\nresidual: "
                  << (clean ? "0" : ("top order " + std::to_string(rsd.top_nonzero())))
                  << " (mod x^" << sr.m << ", D^" << sr.q - 1 - sr.n << ")\n";
    });

    auto* c_dix = app.add_subcommand("dixmier-verify",
                                     "verify the order-(4,6) commuting pair and its curve");
    c_dix->add_option("--alpha", alpha, "specialise the parameter (rational)");
    c_dix->callback([&] {
        SolutionPair sp = alpha.empty() ? dixmier_pair() : dixmier_pair_at(rational_parse(alpha));
        commutation_check(sp);
        WeylOp br = commutator(sp.p, sp.q);
        WeylOp rel_val = eval_poly(sp.relation, sp.p, sp.q);
        if (json) {
            emit({{"P", render_operator(sp.p)},
                  {"Q", render_operator(sp.q)},
                  {"relation", render_bipoly(sp.relation, true)},
                  {"ord_P", ord(sp.p)},
                  {"ord_Q", ord(sp.q)},
                  {"commutator_zero", br.is_zero()},
                  {"relation_zero", rel_val.is_zero()}});
            return;
        }
        std::cout << "P = " << render_operator(sp.p) << "\nQ = " << render_operator(sp.q)
                  << "\nrelation: " << render_bipoly(sp.relation, true) << " = 0"
                  << "\nord P = " << ord(sp.p) << ", ord Q = " << ord(sp.q)
                  << "\n[P,Q] = 0: " << (br.is_zero() ? "verified" : "FAILED")
                  << "\nrelation(P,Q) = 0: " << (rel_val.is_zero() ? "verified" : "FAILED")
                  << "\n";
    });

    auto* c_rel = app.add_subcommand("find-relation",
                                     "kernel of the P^i Q^j evaluation up to a box");
    c_rel->add_option("left", expr)->required();
    c_rel->add_option("right", expr2)->required();
    c_rel->add_option("--degx", deg_x, "max X-exponent");
    c_rel->add_option("--degy", deg_y, "max Y-exponent");
    c_rel->add_option("--alpha", alpha, "specialise the parameter first");
    c_rel->callback([&] {
        WeylOp p = parse_operator(expr), q = parse_operator(expr2);
        if (!alpha.empty()) {
            Rational r = rational_parse(alpha);
            p = p.specialize(r);
            q = q.specialize(r);
        }
        auto basis = find_relation(p, q, deg_x, deg_y);
        if (json) {
            Json arr = Json::array();
            for (const auto& rel : basis)
                arr.push_back({{"relation", render_bipoly(rel, true)}, {"poly", json_bipoly(rel)}});
            emit({{"count", basis.size()}, {"basis", arr}});
            return;
        }
        std::cout << "relations: " << basis.size() << "\n";
        for (const auto& rel : basis) std::cout << "  " << render_bipoly(rel, true) << " = 0\n";
    });

    auto* c_probe = app.add_subcommand("probe", "ad-chain and graded-semigroup probes");
    c_probe->add_option("left", expr)->required();
    c_probe->add_option("right", expr2)->required();
    c_probe->add_option("--bound", bound, "chain length / order scan bound")->default_val(12);
    c_probe->callback([&] {
        WeylOp p = parse_operator(expr), q = parse_operator(expr2);
        SpaceProbeReport rep = space_probes(p, q, bound);
        RingRankReport rr = ring_rank({p, q}, bound);
        if (json) {
            Json out{{"span_rank", rep.span_rank},
                     {"span_stabilized", rep.stabilized},
                     {"central", rep.central},
                     {"ring_rank", rr.rank},
                     {"ring_rank_stabilized", rr.stabilized}};
            out["nilpotency"] = rep.nilpotent ? Json(rep.nilpotency) : Json(nullptr);
            out["eigenvalue"] = rep.has_eigen ? Json(rep.eigenvalue.str()) : Json(nullptr);
            emit(out);
            return;
        }
        std::cout << "span-rank = " << rep.span_rank
                  << (rep.stabilized ? " (stabilized)" : " (still growing)") << "\n"
                  << "nilpotency: "
                  << (rep.nilpotent ? std::to_string(rep.nilpotency) : std::string("none"))
                  << "\n"
                  << "eigenvalue: " << (rep.has_eigen ? rep.eigenvalue.str() : std::string("none"))
                  << "\n"
                  << "central: " << (rep.central ? "yes" : "no") << "\n"
                  << "ring-rank = " << rr.rank
                  << (rr.stabilized ? " (stabilized)" : " (still growing)") << "\n";
    });

    auto* c_orbit = app.add_subcommand("orbit-search",
                                       "breadth-first tame orbit of the verified pair");
    c_orbit->add_option("--gens", gens_arg, "generator word or a file containing one")->required();
    c_orbit->add_option("--depth", depth, "maximum word length");
    c_orbit->add_option("--budget", budget, "maximum distinct pairs kept");
    c_orbit->add_option("--alpha", alpha, "specialise the parameter (rational)");
    c_orbit->callback([&] {
        std::string text = gens_arg;
        if (std::filesystem::exists(gens_arg)) {
            std::ifstream in(gens_arg);
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        TameWord gens = word_parse(text);
        SolutionPair sp = alpha.empty() ? dixmier_pair() : dixmier_pair_at(rational_parse(alpha));
        OrbitReport rep = orbit_search(sp, gens, depth, budget);
        if (json) {
            Json cols = Json::array();
            for (const auto& c : rep.collisions)
                cols.push_back({word_or_identity(c[0]), word_or_identity(c[1])});
            emit({{"distinct", rep.distinct},
                  {"explored_depth", rep.explored_depth},
                  {"budget_exceeded", rep.budget_exceeded},
                  {"collision_count", rep.collision_count},
                  {"collisions", cols}});
            return;
        }
        std::cout << "distinct pairs: " << rep.distinct << "\nexplored depth: "
                  << rep.explored_depth
                  << "\nbudget exceeded: " << (rep.budget_exceeded ? "yes" : "no")
                  << "\ncollisions: " << rep.collision_count << "\n";
        for (const auto& c : rep.collisions)
            std::cout << "  collision: \"" << word_or_identity(c[0]) << "\" and \""
                      << word_or_identity(c[1]) << "\"\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const weyl::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
