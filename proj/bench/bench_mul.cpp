// Compares the serial product kernel against the parallel one on dense
// operands and checks they agree term for term.
#include <chrono>
#include <cstdio>

#include "weyl/weyl_op.hpp"

using namespace weyl;

namespace {

WeylOp dense_operand(long size, long seed) {
    // Deterministic dense block of x^i D^j terms with mildly varying
    // parameter coefficients.
    WeylOp p;
    for (long i = 0; i < size; ++i)
        for (long j = 0; j < size; ++j) {
            ParamPoly c = ParamPoly(Rational((i * 7 + j * 3 + seed) % 11 + 1)) +
                          ParamPoly::variable() * ParamPoly((i + j + seed) % 5);
            p.add_term(i, j, c);
        }
    return p;
}

template <typename F>
double time_ms(F&& f, WeylOp& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
    std::printf("%8s %12s %12s %8s\n", "size", "serial(ms)", "parallel(ms)", "speedup");
    for (long size : {6, 10, 14, 18}) {
        WeylOp a = dense_operand(size, 1);
        WeylOp b = dense_operand(size, 2);
        WeylOp rs, rp;
        double ts = time_ms([&] { return mul_serial(a, b); }, rs);
        double tp = time_ms([&] { return mul_parallel(a, b); }, rp);
        if (!(rs == rp)) {
            std::printf("MISMATCH at size %ld\n", size);
            return 1;
        }
        std::printf("%8ld %12.2f %12.2f %8.2f\n", size, ts, tp, ts / (tp > 0 ? tp : 1e-9));
    }
    return 0;
}
