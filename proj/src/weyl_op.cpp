#include "weyl/weyl_op.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weyl {

void WeylOp::add_term(long i, long j, const ParamPoly& c) {
    if (c.is_zero()) return;
    if (i < 0 || j < 0) throw domain_error("negative_exponent", "normal-form exponents must be >= 0");
    auto [it, inserted] = t_.try_emplace(Monomial{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

std::set<Monomial> WeylOp::support() const {
    std::set<Monomial> s;
    for (auto& [m, c] : t_) s.insert(m);
    return s;
}

long WeylOp::max_i() const {
    long v = 0;
    for (auto& [m, c] : t_) v = std::max(v, m.i);
    return v;
}

long WeylOp::max_j() const {
    long v = 0;
    for (auto& [m, c] : t_) v = std::max(v, m.j);
    return v;
}

WeylOp WeylOp::operator-() const {
    WeylOp r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

WeylOp operator+(const WeylOp& l, const WeylOp& r) {
    WeylOp out = l;
    for (auto& [m, c] : r.t_) out.add_term(m.i, m.j, c);
    return out;
}

WeylOp operator-(const WeylOp& l, const WeylOp& r) {
    WeylOp out = l;
    for (auto& [m, c] : r.t_) out.add_term(m.i, m.j, -c);
    return out;
}

WeylOp WeylOp::scaled(const ParamPoly& c) const {
    WeylOp r;
    if (c.is_zero()) return r;
    for (auto& [m, co] : t_) r.t_.emplace(m, co * c);
    return r;
}

WeylOp WeylOp::specialize(const Rational& alpha) const {
    WeylOp r;
    for (auto& [m, co] : t_) r.add_term(m.i, m.j, ParamPoly(co.eval(alpha)));
    return r;
}

WeylOp reorder(long j, long i) {
    if (j < 0 || i < 0) throw domain_error("negative_exponent", "reorder takes non-negative exponents");
    WeylOp out;
    long kmax = std::min(i, j);
    for (long k = 0; k <= kmax; ++k) {
        Integer c = factorial(k) * binomial(j, k) * binomial(i, k);
        out.add_term(i - k, j - k, ParamPoly(Rational(c)));
    }
    return out;
}

namespace {

// x^i1 D^j1 * x^i2 D^j2 expanded into an accumulator map.
void accumulate_product(std::map<Monomial, ParamPoly>& acc, const Monomial& a, const ParamPoly& ca,
                        const Monomial& b, const ParamPoly& cb) {
    ParamPoly c = ca * cb;
    long kmax = std::min(a.j, b.i);
    for (long k = 0; k <= kmax; ++k) {
        Integer f = factorial(k) * binomial(a.j, k) * binomial(b.i, k);
        ParamPoly add = c * ParamPoly(Rational(f));
        Monomial m{a.i + b.i - k, a.j + b.j - k};
        auto [it, inserted] = acc.try_emplace(m, add);
        if (!inserted) it->second += add;
    }
}

WeylOp from_accumulator(std::map<Monomial, ParamPoly>&& acc) {
    WeylOp out;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.add_term(m.i, m.j, c);
    return out;
}

constexpr size_t kParallelPairThreshold = 4096;

} // namespace

WeylOp mul_serial(const WeylOp& l, const WeylOp& r) {
    std::map<Monomial, ParamPoly> acc;
    for (auto& [ma, ca] : l.terms())
        for (auto& [mb, cb] : r.terms()) accumulate_product(acc, ma, ca, mb, cb);
    return from_accumulator(std::move(acc));
}

WeylOp mul_parallel(const WeylOp& l, const WeylOp& r) {
    std::vector<std::pair<Monomial, const ParamPoly*>> lt;
    lt.reserve(l.term_count());
    for (auto& [m, c] : l.terms()) lt.emplace_back(m, &c);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::vector<std::map<Monomial, ParamPoly>> local(threads);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t idx = 0; idx < lt.size(); ++idx) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        auto& acc = local[tid];
        for (auto& [mb, cb] : r.terms()) accumulate_product(acc, lt[idx].first, *lt[idx].second, mb, cb);
    }

    // exact addition commutes, so the merge order cannot change the result
    std::map<Monomial, ParamPoly> acc = std::move(local[0]);
    for (int t = 1; t < threads; ++t)
        for (auto& [m, c] : local[t]) {
            auto [it, inserted] = acc.try_emplace(m, c);
            if (!inserted) it->second += c;
        }
    return from_accumulator(std::move(acc));
}

WeylOp operator*(const WeylOp& l, const WeylOp& r) {
    if (l.term_count() * r.term_count() >= kParallelPairThreshold) return mul_parallel(l, r);
    return mul_serial(l, r);
}

WeylOp WeylOp::pow(unsigned long e) const {
    WeylOp acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

WeylOp commutator(const WeylOp& p, const WeylOp& q) { return p * q - q * p; }

WeylOp ad_power(const WeylOp& p, const WeylOp& q, unsigned long n) {
    WeylOp r = q;
    for (unsigned long k = 0; k < n; ++k) r = commutator(p, r);
    return r;
}

long ord(const WeylOp& p) {
    if (p.is_zero()) throw domain_error("zero_operator", "ord of the zero operator");
    return p.max_j();
}

long ord_x(const WeylOp& p) {
    if (p.is_zero()) throw domain_error("zero_operator", "ord_x of the zero operator");
    return p.max_i();
}

XPoly coeff_of_dpow(const WeylOp& p, long l) {
    std::vector<ParamPoly> c;
    for (auto& [m, co] : p.terms()) {
        if (m.j != l) continue;
        if (static_cast<size_t>(m.i) >= c.size()) c.resize(m.i + 1);
        c[m.i] = co;
    }
    return XPoly(std::move(c));
}

XPoly highest_term(const WeylOp& p) { return coeff_of_dpow(p, ord(p)); }

bool is_monic(const WeylOp& p) { return highest_term(p).is_one(); }

} // namespace weyl
