#pragma once

#include <functional>
#include <span>

#include "autoforma/automorphy.hpp"

namespace autoforma {

// Gauge phase phi^{nu,mu}_tau, the real solution of
//   dphi/dzbar = -i mu ((tau dtaubar/dzbar - taubar dtau/dzbar)
//                       - (|dtau/dz|^2 - |dtau/dzbar|^2) z)
// normalized by phi(0) = 0.  Realness pins dphi/dz = conj(dphi/dzbar), so the
// solution is unique.  For affine tau the right-hand side is the constant
// -i mu kappa with kappa = conj(c) e - d conj(e), and phi(z) = -2 mu Im(conj(kappa) z).
struct PhiSolution {
    cnum kappa{0.0, 0.0};
    double mu = 0.0;
    bool closed_form = true;
    int nodes_per_unit = 32;
    int rule_order = 16;
    std::function<cnum(cnum)> rhs; // S(w), quadrature path only

    double operator()(cnum z) const;
};

// dphi~/dzbar at z (exact for affine tau: the constant -i mu kappa).
cnum phi_rhs(const AffineTau& tau, const Weights& w, cnum z);
cnum phi_rhs(const SampledMap& tau, const Weights& w, cnum z);

PhiSolution phi_affine(const AffineTau& tau, const Weights& w);

// Quadrature-backed solution for a sampled tau (finite-difference derivatives).
PhiSolution phi_sampled(const SampledMap& tau, const Weights& w);

// Line integral of 2 Re(conj(S) dw) along a polyline from 0 to z.
// Composite 16-point Gauss-Legendre, panels <= 0.5; the result is checked
// against a node-doubled pass and QuadratureUnconverged is thrown if the two
// disagree beyond 1e-10.
double phi_quadrature(const SampledMap& tau, const Weights& w, cnum z,
                      std::span<const cnum> path);

// Remark-style reduction: reconstruct psi from phi and return the worst
// central-difference residual of
//   dpsi/dzbar = taubar dtau/dzbar,
//   dpsi/dz    = (1/mu)(nu - B) zbar + taubar dtau/dz.
double psi_reduction_residual(const AffineTau& tau, const Weights& w, const PhiSolution& phi,
                              std::span<const cnum> samples);

// Real exponent of the pseudo-character:
//   chi_tau(gamma) = exp(i phi(gamma) + 2 i mu Im<tau(0), rho(gamma)^{-1}.0>).
// This is the z-independent multiplier produced by conjugating the mixed
// functional equation with the gauge factor, i.e. the value chi_hat(0; gamma).
double chi_tau_phase(const AffineTau& tau, const Weights& w, const PhiSolution& phi, cnum gamma);
cnum chi_tau(const AffineTau& tau, const Weights& w, const PhiSolution& phi, cnum gamma);

// chi_hat(z; gamma) = e^{i(phi(z+gamma)-phi(z))}
//                     e^{2i([B-nu] Im<z,gamma> + mu Im<tau(z), rho(gamma)^{-1}.0>)}
cnum chi_hat(const AffineTau& tau, const Weights& w, const PhiSolution& phi, cnum z, cnum gamma);

// Max over zs of |chi_hat(z;gamma) - chi_hat(0;gamma)|.  Also guards the
// identity chi_hat(0;gamma) == chi_tau(gamma) to 1e-12.
double chi_hat_residual(const AffineTau& tau, const Weights& w, const PhiSolution& phi,
                        cnum gamma, std::span<const cnum> zs);

// Max over all |m|,|n|,|m'|,|n'| <= range of
// |chi(g+g') - e^{2iB Im<g,g'>} chi(g) chi(g')|.
double pseudo_char_residual(const AffineTau& tau, const Weights& w, const PhiSolution& phi,
                            const Lattice& lat, int range);

struct CharacterTable {
    cnum chi_omega1{1.0, 0.0};
    cnum chi_omega2{1.0, 0.0};
    double B = 0.0;
};

CharacterTable character_table(const AffineTau& tau, const Weights& w, const PhiSolution& phi,
                               const Lattice& lat);

// The (tau, weights, phi) bundle most verification stages operate on.
struct MixedContext {
    AffineTau tau;
    Weights w;
    PhiSolution phi;
};

inline MixedContext make_context(const AffineTau& tau, double nu, double mu) {
    const Weights w = compute_B(tau, nu, mu);
    return {tau, w, phi_affine(tau, w)};
}

} // namespace autoforma
