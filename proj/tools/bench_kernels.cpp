// Times the serial reference kernels against the OpenMP variants on a
// realistic workload: Landau series evaluation over fundamental-cell grids.

#include <chrono>
#include <cstdio>
#include <numbers>

#include "autoforma/forms.hpp"
#include "autoforma/kernels.hpp"

using namespace autoforma;
namespace chrono = std::chrono;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = chrono::steady_clock::now();
        fn();
        best = std::min(best, chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count());
    }
    return best;
}

} // namespace

int main() {
    const Lattice square{cnum{1, 0}, cnum{0, 1}};
    const AffineTau tau{cnum{1, 0}, cnum{0, 0}, cnum{0.5, 0}};
    const MixedContext ctx = make_context(tau, std::numbers::pi / 2, std::numbers::pi / 2);
    const FormEvaluator F =
        poincare_series_fixed_radius(ctx, square, 12.0, gaussian_seed(ctx.w.B, cnum{0, 0}));

#if defined(_OPENMP)
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("%-24s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

    for (const int n : {64, 128, 256}) {
        const auto pts = cell_grid_points(square, n, n);
        volatile double sink = 0.0;

        const double ts = time_ms([&] {
            const auto v = eval_grid_serial(F.evaluation, pts);
            sink = sink + v.back().real();
        }, 3);
        const double tp = time_ms([&] {
            const auto v = eval_grid_parallel(F.evaluation, pts);
            sink = sink + v.back().real();
        }, 3);
        char label[32];
        std::snprintf(label, sizeof label, "eval_grid %dx%d", n, n);
        std::printf("%-24s %10.2f %10.2f %7.2fx\n", label, ts, tp, ts / tp);
    }

    {
        const auto pts = cell_grid_points(square, 192, 192);
        const double ts = time_ms([&] { (void)max_abs_serial(F.evaluation, pts); }, 3);
        const double tp = time_ms([&] { (void)max_abs_parallel(F.evaluation, pts); }, 3);
        std::printf("%-24s %10.2f %10.2f %7.2fx\n", "max_abs 192x192", ts, tp, ts / tp);
    }
    return 0;
}
