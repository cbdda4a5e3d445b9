// Serial reference vs OpenMP timings for the data-parallel kernels.
// Prints CSV: kernel,threads,serial_ms,parallel_ms,speedup,identical

#include "qchan/metrics.hpp"
#include "qchan/parallel.hpp"
#include "qchan/tables.hpp"
#include "qchan/telesim.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

using namespace qchan;

template <class F>
double best_ms(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

template <class S, class P>
void run(const char* name, int reps, S&& serial_fn, P&& parallel_fn) {
    decltype(serial_fn()) a{}, b{};
    const double ts = best_ms(reps, [&] { a = serial_fn(); });
    const double tp = best_ms(reps, [&] { b = parallel_fn(); });
    std::printf("%s,%d,%.3f,%.3f,%.2f,%s\n", name, max_threads(), ts, tp, ts / tp, a == b ? "true" : "false");
}

bool same(const SweepTable& x, const SweepTable& y) { return x.rows == y.rows; }

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    const DensityMatrix wd = make_state(WernerDerivative{0.9, 0.8});

    std::printf("kernel,threads,serial_ms,parallel_ms,speedup,identical\n");
    run("haar_mc_1e5", reps, [&] { return serial::haar_average_fidelity(wd, 100000, 1); },
        [&] { return haar_average_fidelity(wd, 100000, 1); });
    run("fef_oracle_2e5", reps, [&] { return serial::fef_sampling_oracle(wd, 200000, 1); },
        [&] { return fef_sampling_oracle(wd, 200000, 1); });
    run("chsh_oracle_grid48", reps, [&] { return serial::chsh_max_oracle(wd, 48); },
        [&] { return chsh_max_oracle(wd, 48); });

    SweepTable ss, sp;
    const double ts = best_ms(reps, [&] { ss = serial::sweep("mems", 0.001); });
    const double tp = best_ms(reps, [&] { sp = sweep("mems", 0.001); });
    std::printf("sweep_mems_1001,%d,%.3f,%.3f,%.2f,%s\n", max_threads(), ts, tp, ts / tp,
                same(ss, sp) ? "true" : "false");
    return 0;
}
