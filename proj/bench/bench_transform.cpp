// Times the oscillatory-sum engines against each other: the serial
// std::polar reference versus the recurrence kernel (serial and with the
// OpenMP team).  Also reports the largest deviation from the reference.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gharm/grid.hpp"
#include "gharm/kernels.hpp"

using namespace gharm;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main() {
    const LineGrid grid = default_line_grid();
    const FreqGrid freqs = default_freq_grid();

    std::vector<double> t(grid.count), xi(freqs.count);
    std::vector<complex> wv(grid.count);
    for (int j = 0; j < grid.count; ++j) {
        t[j] = grid.node(j);
        wv[j] = grid.weight(j) * complex(1.0 / std::cosh(t[j]), 0.0);
    }
    for (int k = 0; k < freqs.count; ++k) xi[k] = freqs.node(k);

    std::vector<complex> ref(freqs.count), fast(freqs.count);
    const int reps = 5;

    const double t_ref = time_ms(
        [&] { kernels::oscillatory_sum(t, wv, xi, 2.0, ref, kernels::Engine::reference); }, reps);

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    const double t_serial = time_ms(
        [&] { kernels::oscillatory_sum(t, wv, xi, 2.0, fast, kernels::Engine::fast); }, reps);
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    const double t_parallel = time_ms(
        [&] { kernels::oscillatory_sum(t, wv, xi, 2.0, fast, kernels::Engine::fast); }, reps);

    double dev = 0.0;
    for (int k = 0; k < freqs.count; ++k) dev = std::max(dev, std::abs(fast[k] - ref[k]));

    const double mel = double(grid.count) * freqs.count / 1e6;
    std::printf("oscillatory sum, N=%d nodes x M=%d points (%.1f M elements)\n", grid.count,
                freqs.count, mel);
    std::printf("  reference (serial, std::polar) : %8.2f ms  (%6.1f Mel/s)\n", t_ref,
                mel / t_ref * 1e3);
    std::printf("  fast      (serial, recurrence) : %8.2f ms  (%6.1f Mel/s)\n", t_serial,
                mel / t_serial * 1e3);
#ifdef _OPENMP
    std::printf("  fast      (OpenMP, %2d threads) : %8.2f ms  (%6.1f Mel/s)\n", max_threads,
                t_parallel, mel / t_parallel * 1e3);
#else
    std::printf("  fast      (no OpenMP build)    : %8.2f ms  (%6.1f Mel/s)\n", t_parallel,
                mel / t_parallel * 1e3);
#endif
    std::printf("  max |fast - reference|         : %.3e\n", dev);
    return 0;
}
