#include "doctest.h"

#include <numbers>
#include <vector>

#include "autoforma/errors.hpp"
#include "autoforma/forms.hpp"
#include "autoforma/rng.hpp"

using namespace autoforma;

namespace {
constexpr double kPi = std::numbers::pi;
const Lattice kSquare{cnum{1, 0}, cnum{0, 1}};
const AffineTau kTauZ{cnum{1, 0}, cnum{0, 0}, cnum{0, 0}};
const AffineTau kTauShift{cnum{1, 0}, cnum{0, 0}, cnum{0.5, 0}};

MixedContext canonical_trivial() { return make_context(kTauZ, kPi / 2, kPi / 2); }
MixedContext canonical_shift() { return make_context(kTauShift, kPi / 2, kPi / 2); }
} // namespace

TEST_CASE("gaussian seed") {
    const cnum center{0.3, -0.4};
    const FormEvaluator g = gaussian_seed(kPi, center);
    CHECK(std::abs(g(center) - 1.0) == 0.0);
    for (const double r : {0.5, 1.0, 2.0})
        CHECK(std::abs(g(center + cnum{r, 0}) - std::exp(-(kPi / 2) * r * r)) <= 1e-15);

    const FormEvaluator g0 = gaussian_seed(kPi, cnum{0, 0});
    CHECK(std::abs(g0(cnum{1, 0})) == doctest::Approx(0.20787957635076193).epsilon(1e-12));

    CHECK_THROWS_AS(gaussian_seed(0.0, cnum{0, 0}), NonPositiveWeight);
    CHECK_THROWS_AS(gaussian_seed(-2.0, cnum{0, 0}), NonPositiveWeight);
}

TEST_CASE("poincare landau construction: canonical square lattice") {
    const MixedContext ctx = canonical_trivial();
    const FormEvaluator seed = gaussian_seed(ctx.w.B, cnum{0, 0});
    const FormEvaluator F = poincare_landau(seed, ctx, kSquare, 1e-10);

    CHECK(F.kind == FormEvaluator::Kind::landau);
    CHECK(F.B == doctest::Approx(kPi));

    DeterministicRng rng(51);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const cnum z = rng.box(1.5);
        const cnum gamma{double(rng.uniform_int(-3, 3)), double(rng.uniform_int(-3, 3))};
        worst = std::max(worst, landau_residual(F, ctx, z, gamma));
    }
    CHECK(worst <= 1e-8);

    // composite gamma not in the generator set
    const cnum gamma{1, 1};
    for (int k = 0; k < 10; ++k) {
        const cnum z = rng.box(1.5);
        const cnum lhs = F(z + gamma);
        const cnum rhs = chi_tau(ctx.tau, ctx.w, ctx.phi, gamma) *
                         j_alpha(ctx.w.B, GroupElement::translation(gamma), z) * F(z);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(F(z))));
    }
}

TEST_CASE("collapsing seed engages the deterministic center fallback") {
    const MixedContext ctx = canonical_trivial();
    FormEvaluator dead = gaussian_seed(ctx.w.B, cnum{0, 0});
    dead.evaluation = [](cnum) { return cnum{0, 0}; };

    const FormEvaluator F = poincare_landau(dead, ctx, kSquare, 1e-10);
    CHECK(std::abs(F.seed_center - kSquare.omega1 / 3.0) <= 1e-12);
    CHECK(nontriviality_scan(F, kSquare, 32) > 1e-6);
}

TEST_CASE("poincare landau refuses a non-integral configuration") {
    const MixedContext ctx = make_context(kTauZ, 1.0, 1.0);
    const FormEvaluator seed = gaussian_seed(ctx.w.B, cnum{0, 0});
    CHECK_THROWS_AS(poincare_landau(seed, ctx, kSquare, 1e-10), IntegralityViolated);
}

TEST_CASE("landau residual edge cases") {
    const MixedContext ctx = canonical_trivial();
    const FormEvaluator seed = gaussian_seed(ctx.w.B, cnum{0, 0});

    DeterministicRng rng(52);
    for (int k = 0; k < 10; ++k)
        CHECK(landau_residual(seed, ctx, rng.box(2.0), cnum{0, 0}) == 0.0);

    // a bare Gaussian is not automorphic: negative control
    double worst = 0.0;
    for (int k = 0; k < 10; ++k)
        worst = std::max(worst, landau_residual(seed, ctx, rng.box(1.0), kSquare.omega1));
    CHECK(worst > 0.01);
}

TEST_CASE("gauge transform basics") {
    const MixedContext trivial = make_context(kTauZ, 1.0, 1.0); // phi == 0
    const FormEvaluator seed = gaussian_seed(2.0, cnum{0.2, 0.1});

    DeterministicRng rng(53);
    const FormEvaluator same = apply_gauge(trivial.phi, seed, GaugeDirection::forward);
    for (int k = 0; k < 20; ++k) {
        const cnum z = rng.box(2.0);
        CHECK(std::abs(same(z) - seed(z)) == 0.0);
    }

    const MixedContext ctx = canonical_shift();
    const FormEvaluator fwd = apply_gauge(ctx.phi, seed, GaugeDirection::forward);
    const FormEvaluator back = apply_gauge(ctx.phi, fwd, GaugeDirection::inverse);
    for (int k = 0; k < 20; ++k) {
        const cnum z = rng.box(2.0);
        CHECK(std::abs(std::abs(fwd(z)) - std::abs(seed(z))) <= 1e-15);
        CHECK(std::abs(back(z) - seed(z)) <= 1e-15);
    }
}

TEST_CASE("theorem pipeline: gauge-inverse of a Landau form is mixed") {
    const MixedContext ctx = canonical_shift();
    const FormEvaluator seed = gaussian_seed(ctx.w.B, cnum{0, 0});
    const FormEvaluator landau = poincare_landau(seed, ctx, kSquare, 1e-10);
    const FormEvaluator mixed = apply_gauge(ctx.phi, landau, GaugeDirection::inverse);
    CHECK(mixed.kind == FormEvaluator::Kind::mixed);

    DeterministicRng rng(54);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const cnum z = rng.box(1.5);
        const cnum gamma{double(rng.uniform_int(-2, 2)), double(rng.uniform_int(-2, 2))};
        CHECK(mixed_residual(mixed, ctx.tau, ctx.w, z, cnum{0, 0}) == 0.0);
        worst = std::max(worst, mixed_residual(mixed, ctx.tau, ctx.w, z, gamma));
    }
    CHECK(worst <= 1e-8);

    // forward direction: re-applying the gauge recovers a Landau form
    const FormEvaluator relandau = apply_gauge(ctx.phi, mixed, GaugeDirection::forward);
    double worst_l = 0.0;
    for (int k = 0; k < 50; ++k) {
        const cnum z = rng.box(1.5);
        const cnum gamma{double(rng.uniform_int(-2, 2)), double(rng.uniform_int(-2, 2))};
        worst_l = std::max(worst_l, landau_residual(relandau, ctx, z, gamma));
    }
    CHECK(worst_l <= 1e-8);

    // negative control: skipping the gauge leaves a functional-equation defect
    double control = 0.0;
    for (int k = 0; k < 50; ++k) {
        const cnum z = rng.box(1.5);
        const cnum gamma{double(rng.uniform_int(-2, 2)), double(rng.uniform_int(-2, 2))};
        control = std::max(control, mixed_residual(landau, ctx.tau, ctx.w, z, gamma));
    }
    CHECK(control > 1e-3);
}

TEST_CASE("gauge conjugation identity, canonical config") {
    const MixedContext ctx = canonical_shift();
    DeterministicRng rng(55);
    for (int k = 0; k < 100; ++k) {
        const cnum z = rng.box(2.0);
        const cnum gamma{double(rng.uniform_int(-3, 3)), double(rng.uniform_int(-3, 3))};
        const GroupElement tg = GroupElement::translation(gamma);
        const cnum lhs = std::polar(1.0, ctx.phi(z + gamma)) *
                         J_factor(ctx.tau, ctx.w, tg, z) * std::polar(1.0, -ctx.phi(z));
        const cnum rhs = chi_tau(ctx.tau, ctx.w, ctx.phi, gamma) * j_alpha(ctx.w.B, tg, z);
        CHECK(std::abs(lhs - rhs) <= 1e-11);
    }
}

TEST_CASE("trivial pair: mixed and Landau residuals coincide") {
    const MixedContext ctx = canonical_trivial(); // tau = z, phi == 0, chi == 1
    const FormEvaluator F = poincare_landau(gaussian_seed(ctx.w.B, cnum{0, 0}), ctx, kSquare, 1e-10);

    DeterministicRng rng(56);
    for (int k = 0; k < 30; ++k) {
        const cnum z = rng.box(1.5);
        const cnum gamma{double(rng.uniform_int(-2, 2)), double(rng.uniform_int(-2, 2))};
        const double lr = landau_residual(F, ctx, z, gamma);
        const double mr = mixed_residual(F, ctx.tau, ctx.w, z, gamma);
        CHECK(std::abs(lr - mr) <= 1e-12);
    }
}

TEST_CASE("truncation monotonicity") {
    const MixedContext ctx = canonical_trivial();
    const double R = 8.0;
    const FormEvaluator seed = gaussian_seed(ctx.w.B, cnum{0, 0});
    const FormEvaluator coarse = poincare_series_fixed_radius(ctx, kSquare, R, seed);
    const FormEvaluator fine = poincare_series_fixed_radius(ctx, kSquare, 2 * R, seed);

    DeterministicRng rng(57);
    const double zmax = 1.5;
    const double bound = series_tail_bound(kSquare, ctx.w.B, R, zmax * std::numbers::sqrt2);
    for (int k = 0; k < 20; ++k) {
        const cnum z = rng.box(zmax);
        CHECK(std::abs(coarse(z) - fine(z)) <= bound + 1e-15);
    }
}

TEST_CASE("|F| is lattice periodic") {
    const MixedContext ctx = canonical_shift();
    const FormEvaluator landau = poincare_landau(gaussian_seed(ctx.w.B, cnum{0, 0}), ctx, kSquare, 1e-10);
    const FormEvaluator mixed = apply_gauge(ctx.phi, landau, GaugeDirection::inverse);

    DeterministicRng rng(58);
    for (int k = 0; k < 30; ++k) {
        const cnum z = rng.box(1.0);
        const cnum gamma{double(rng.uniform_int(-2, 2)), double(rng.uniform_int(-2, 2))};
        CHECK(std::abs(std::abs(landau(z + gamma)) - std::abs(landau(z))) <= 1e-8);
        CHECK(std::abs(std::abs(mixed(z + gamma)) - std::abs(mixed(z))) <= 1e-8);
    }
}

TEST_CASE("nontriviality scan") {
    FormEvaluator zero;
    zero.evaluation = [](cnum) { return cnum{0, 0}; };
    CHECK(nontriviality_scan(zero, kSquare, 16) == 0.0);

    const FormEvaluator seed = gaussian_seed(kPi, cnum{0.5, 0.5});
    CHECK(nontriviality_scan(seed, kSquare, 32) > 0.1);

    const MixedContext ctx = canonical_trivial();
    const FormEvaluator F = poincare_landau(gaussian_seed(ctx.w.B, cnum{0, 0}), ctx, kSquare, 1e-10);
    CHECK(nontriviality_scan(F, kSquare, 32) > 1e-6);
}
