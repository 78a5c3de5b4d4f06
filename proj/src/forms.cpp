#include "autoforma/forms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "autoforma/errors.hpp"
#include "autoforma/kernels.hpp"
#include "autoforma/rng.hpp"
#include "autoforma/summation.hpp"

namespace autoforma {

namespace {

constexpr std::uint64_t kConstructionSeed = 0x0AF05EEDu;
constexpr double kVanishingFloor = 1e-8;

struct SeriesTerm {
    cnum gamma;
    double char_phase; // chi_tau phase, precomputed per lattice point
};

std::function<cnum(cnum)> make_series_eval(std::shared_ptr<const std::vector<SeriesTerm>> terms,
                                           double B, std::function<cnum(cnum)> seed) {
    return [terms = std::move(terms), B, seed = std::move(seed)](cnum z) -> cnum {
        KahanComplex acc;
        for (const SeriesTerm& t : *terms) {
            // conj(chi(gamma) j^B((1,gamma), z)) has phase 2B Im<z,gamma> - theta
            const double ang = 2.0 * B * im_scal(z, t.gamma) - t.char_phase;
            acc.add(std::polar(1.0, ang) * seed(z + t.gamma));
        }
        return acc.result();
    };
}

} // namespace

FormEvaluator gaussian_seed(double B, cnum center) {
    if (!(B > 0.0))
        throw NonPositiveWeight("gaussian_seed: B = " + std::to_string(B) + " admits no decaying seed");
    FormEvaluator f;
    f.kind = FormEvaluator::Kind::seed;
    f.B = B;
    f.seed_center = center;
    f.evaluation = [B, center](cnum z) -> cnum {
        return {std::exp(-(B / 2.0) * std::norm(z - center)), 0.0};
    };
    return f;
}

double series_tail_bound(const Lattice& lat, double B, double radius, double working_radius) {
    // Sum the annulus that dominates the tail; beyond it the Gaussian factor
    // is below 1e-300 for any desk-scale configuration.
    const double outer = radius + 8.0 + working_radius;
    double bound = 0.0;
    for (const LatticePoint& p : enumerate_points(lat, outer)) {
        const double r = std::abs(p.gamma);
        if (r <= radius) continue;
        const double gap = r - working_radius;
        bound += std::exp(-(B / 2.0) * gap * gap);
    }
    return bound;
}

FormEvaluator poincare_series_fixed_radius(const MixedContext& ctx, const Lattice& lat,
                                           double radius, const FormEvaluator& seed) {
    auto terms = std::make_shared<std::vector<SeriesTerm>>();
    for (const LatticePoint& p : enumerate_points(lat, radius))
        terms->push_back({p.gamma, chi_tau_phase(ctx.tau, ctx.w, ctx.phi, p.gamma)});

    FormEvaluator f;
    f.kind = FormEvaluator::Kind::landau;
    f.B = ctx.w.B;
    f.character = character_table(ctx.tau, ctx.w, ctx.phi, lat);
    f.truncation_radius = radius;
    f.seed_center = seed.seed_center;
    f.evaluation = make_series_eval(std::move(terms), ctx.w.B, seed.evaluation);
    return f;
}

FormEvaluator poincare_landau(const FormEvaluator& seed, const MixedContext& ctx,
                              const Lattice& lat, double tol, double max_radius) {
    const double B = ctx.w.B;
    if (!(B > 0.0))
        throw NonPositiveWeight("poincare_landau: B = " + std::to_string(B) + " <= 0");
    const IntegralityResult integ = check_integrality(ctx.tau, ctx.w, lat);
    if (!integ.ok)
        throw IntegralityViolated("poincare_landau: phi/pi is not integral on generator pairs");
    if (!(tol > 0.0)) throw std::invalid_argument("poincare_landau: tol must be > 0");

    const double gen_max = std::max(std::abs(lat.omega1), std::abs(lat.omega2));
    const double working = 2.0 * gen_max;
    // Probes evaluate F at z + gamma with |m|,|n| <= 3; keep the whole
    // reachable region inside the accuracy disk.
    const double reach = working + 3.0 * (std::abs(lat.omega1) + std::abs(lat.omega2));

    double radius = reach + std::sqrt(std::max(0.0, 2.0 * std::log(1.0 / tol) / B));
    const double step = 0.25 * std::min(std::abs(lat.omega1), std::abs(lat.omega2));
    while (radius < max_radius && series_tail_bound(lat, B, radius, reach) >= tol)
        radius += step;
    radius = std::min(radius, max_radius);

    // Candidate seeds: the caller's first, then Gaussians at the deterministic
    // fallback centers; at most 4 attempts total.
    std::vector<FormEvaluator> candidates = {seed};
    for (const cnum c : {cnum{0.0, 0.0}, lat.omega1 / 3.0, lat.omega2 / 3.0,
                         (lat.omega1 + lat.omega2) / 3.0}) {
        if (std::abs(c - seed.seed_center) <= 1e-12) continue;
        if (candidates.size() < 4) candidates.push_back(gaussian_seed(B, c));
    }

    const std::vector<cnum> cell = cell_grid_points(lat, 32, 32);
    FormEvaluator form;
    bool found = false;
    for (const FormEvaluator& candidate : candidates) {
        form = poincare_series_fixed_radius(ctx, lat, radius, candidate);
        if (max_abs_serial(form.evaluation, cell) >= kVanishingFloor) {
            found = true;
            break;
        }
    }
    if (!found)
        throw NumericallyVanishing("poincare_landau: |F| < 1e-8 on the cell for all " +
                                   std::to_string(candidates.size()) + " seed centers");

    DeterministicRng rng(kConstructionSeed);
    for (int k = 0; k < 20; ++k) {
        const cnum z = rng.box(working / std::numbers::sqrt2);
        const cnum gamma = static_cast<double>(rng.uniform_int(-3, 3)) * lat.omega1 +
                           static_cast<double>(rng.uniform_int(-3, 3)) * lat.omega2;
        const double r = landau_residual(form, ctx, z, gamma);
        if (r > 10.0 * tol)
            throw ResidualOverTolerance("poincare_landau: construction probe residual " +
                                        std::to_string(r) + " exceeds 10*tol");
    }
    return form;
}

double landau_residual(const FormEvaluator& F, const std::function<cnum(cnum)>& chi, double B,
                       cnum z, cnum gamma) {
    const cnum fz = F(z);
    const cnum lhs = F(z + gamma);
    const cnum rhs = chi(gamma) * j_alpha(B, GroupElement::translation(gamma), z) * fz;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(fz));
}

double landau_residual(const FormEvaluator& F, const MixedContext& ctx, cnum z, cnum gamma) {
    return landau_residual(
        F, [&ctx](cnum g) { return chi_tau(ctx.tau, ctx.w, ctx.phi, g); }, ctx.w.B, z, gamma);
}

FormEvaluator apply_gauge(const PhiSolution& phi, const FormEvaluator& f, GaugeDirection dir) {
    const double sign = (dir == GaugeDirection::forward) ? 1.0 : -1.0;
    FormEvaluator out = f;
    if (f.kind != FormEvaluator::Kind::seed)
        out.kind = (dir == GaugeDirection::forward) ? FormEvaluator::Kind::landau
                                                    : FormEvaluator::Kind::mixed;
    out.evaluation = [phi, inner = f.evaluation, sign](cnum z) -> cnum {
        return std::polar(1.0, sign * phi(z)) * inner(z);
    };
    return out;
}

double mixed_residual(const FormEvaluator& F, const AffineTau& tau, const Weights& w,
                      cnum z, cnum gamma) {
    const cnum fz = F(z);
    const cnum lhs = F(z + gamma);
    const cnum rhs = J_factor(tau, w, GroupElement::translation(gamma), z) * fz;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(fz));
}

double nontriviality_scan(const FormEvaluator& F, const Lattice& lat, int grid) {
    if (grid <= 0) throw std::invalid_argument("nontriviality_scan: grid must be > 0");
    const std::vector<cnum> pts = cell_grid_points(lat, grid, grid);
    return max_abs_parallel(F.evaluation, pts);
}

} // namespace autoforma
