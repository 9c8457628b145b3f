// Compares the parallel Gray-code solver against the serial reference on the
// embedded catalogue games.

#include <chrono>
#include <cstdio>

#include "bellex/catalog.hpp"
#include "bellex/constructions.hpp"
#include "bellex/lhv.hpp"

using namespace bellex;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void bench_core(int order, int index, int reps) {
    const CorrelationCore core = core_from_sign_matrix(builtin(order, index).matrix);
    LhvConfig serial;
    serial.threads = 1;
    LhvConfig parallel;  // runtime default thread count

    long long v = 0;
    auto t0 = clk::now();
    for (int i = 0; i < reps; ++i) v = lhv_core_value(core, serial);
    const double ts = ms_since(t0) / reps;
    t0 = clk::now();
    for (int i = 0; i < reps; ++i) v = lhv_core_value(core, parallel);
    const double tp = ms_since(t0) / reps;
    std::printf("core %2d/%d  C = %-6lld serial %9.2f ms  parallel %9.2f ms  speedup %.2fx\n",
                order, index, v, ts, tp, ts / tp);
}

void bench_game(int order, int index, int reps) {
    const GameMatrix M = embed_core(core_from_sign_matrix(builtin(order, index).matrix));
    LhvConfig serial;
    serial.threads = 1;
    LhvConfig parallel;

    double v = 0;
    auto t0 = clk::now();
    for (int i = 0; i < reps; ++i) v = lhv_value_naive(M, serial).value;
    const double tn = ms_since(t0) / reps;
    t0 = clk::now();
    for (int i = 0; i < reps; ++i) v = lhv_value(M, parallel).value;
    const double tg = ms_since(t0) / reps;
    std::printf("game %2d/%d  C = %-6.0f naive  %9.2f ms  gray     %9.2f ms  speedup %.2fx\n",
                order, index, v, tn, tg, tn / tg);
}

}  // namespace

int main() {
    bench_core(12, 0, 5);
    bench_core(16, 0, 5);
    bench_core(20, 0, 3);
    bench_game(12, 0, 3);
    return 0;
}
