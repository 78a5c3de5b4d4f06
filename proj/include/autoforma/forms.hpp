#pragma once

#include <functional>

#include "autoforma/phi.hpp"

namespace autoforma {

// A lazily evaluated complex function with construction metadata.
// Evaluations are pure and reentrant.
struct FormEvaluator {
    enum class Kind { seed, landau, mixed };

    Kind kind = Kind::seed;
    double B = 0.0;
    CharacterTable character{};
    double truncation_radius = 0.0;
    cnum seed_center{0.0, 0.0};
    std::function<cnum(cnum)> evaluation;

    cnum operator()(cnum z) const { return evaluation(z); }
};

// g(z) = exp(-(B/2) |z - center|^2). Throws NonPositiveWeight for B <= 0.
FormEvaluator gaussian_seed(double B, cnum center);

// Gaussian tail of the lattice average beyond |gamma| = radius, measured on
// the disk |z| <= working_radius.
double series_tail_bound(const Lattice& lat, double B, double radius, double working_radius);

// Raw truncated average F(z) = sum_{|gamma|<=R} conj(chi(gamma) j^B(gamma,z)) seed(z+gamma)
// in deterministic lattice order with compensated summation. No probing, no
// fallback; building block for poincare_landau and the truncation tests.
FormEvaluator poincare_series_fixed_radius(const MixedContext& ctx, const Lattice& lat,
                                           double radius, const FormEvaluator& seed);

// Landau form construction per the target space of the gauge correspondence:
// requires integrality and B > 0, sizes the truncation radius from the tail
// bound, cycles up to 4 deterministic seed centers if the average collapses on
// the cell (NumericallyVanishing otherwise), then asserts the functional
// equation at 20 seeded probes to 10x tol (ResidualOverTolerance otherwise).
FormEvaluator poincare_landau(const FormEvaluator& seed, const MixedContext& ctx,
                              const Lattice& lat, double tol, double max_radius = 40.0);

// |F(z+gamma) - chi(gamma) j^B(gamma,z) F(z)| / max(1, |F(z)|)
double landau_residual(const FormEvaluator& F, const std::function<cnum(cnum)>& chi, double B,
                       cnum z, cnum gamma);
double landau_residual(const FormEvaluator& F, const MixedContext& ctx, cnum z, cnum gamma);

enum class GaugeDirection { forward, inverse };

// W^{nu,mu}_tau: forward multiplies by e^{i phi(z)}, inverse by e^{-i phi(z)}.
FormEvaluator apply_gauge(const PhiSolution& phi, const FormEvaluator& f, GaugeDirection dir);

// |F(z+gamma) - J^{nu,mu}((1,gamma),z) F(z)| / max(1, |F(z)|)
double mixed_residual(const FormEvaluator& F, const AffineTau& tau, const Weights& w,
                      cnum z, cnum gamma);

// Max |F| over a grid x grid sampling of the fundamental cell.
double nontriviality_scan(const FormEvaluator& F, const Lattice& lat, int grid);

} // namespace autoforma
