#pragma once

#include <functional>
#include <span>
#include <vector>

#include "autoforma/lattice.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace autoforma {

// Data-parallel evaluation kernels. Each point is independent and the series
// behind an evaluator is summed serially per point in a fixed order, so the
// parallel variants must reproduce the serial reference bit for bit; the test
// suite asserts exactly that.

using EvalFn = std::function<cnum(cnum)>;

// grid x grid sampling of the fundamental cell {s w1 + t w2 : s, t in [0,1)},
// row-major in (i, j) with s = i/nx, t = j/ny.
inline std::vector<cnum> cell_grid_points(const Lattice& lat, int nx, int ny) {
    std::vector<cnum> pts;
    pts.reserve(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            pts.push_back((static_cast<double>(i) / nx) * lat.omega1 +
                          (static_cast<double>(j) / ny) * lat.omega2);
    return pts;
}

inline std::vector<cnum> eval_grid_serial(const EvalFn& f, std::span<const cnum> pts) {
    std::vector<cnum> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = f(pts[i]);
    return out;
}

inline std::vector<cnum> eval_grid_parallel(const EvalFn& f, std::span<const cnum> pts) {
    std::vector<cnum> out(pts.size());
    const std::int64_t count = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(pts[static_cast<std::size_t>(i)]);
    return out;
}

inline double max_abs_serial(const EvalFn& f, std::span<const cnum> pts) {
    double worst = 0.0;
    for (const cnum z : pts) worst = std::max(worst, std::abs(f(z)));
    return worst;
}

inline double max_abs_parallel(const EvalFn& f, std::span<const cnum> pts) {
    double worst = 0.0;
    const std::int64_t count = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::int64_t i = 0; i < count; ++i)
        worst = std::max(worst, std::abs(f(pts[static_cast<std::size_t>(i)])));
    return worst;
}

// Max of a per-index metric (probe batches: residuals over seeded samples).
inline double max_over_indices_serial(const std::function<double(std::size_t)>& metric,
                                      std::size_t count) {
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) worst = std::max(worst, metric(i));
    return worst;
}

inline double max_over_indices_parallel(const std::function<double(std::size_t)>& metric,
                                        std::size_t count) {
    double worst = 0.0;
    const std::int64_t n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::int64_t i = 0; i < n; ++i) worst = std::max(worst, metric(static_cast<std::size_t>(i)));
    return worst;
}

} // namespace autoforma
