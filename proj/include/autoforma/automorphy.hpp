#pragma once

#include <array>
#include <functional>

#include "autoforma/equivariant.hpp"
#include "autoforma/lattice.hpp"

namespace autoforma {

// All factors are computed by accumulating the real phase and taking a single
// complex exponential, so |value| = 1 holds to rounding by construction.

inline double j_alpha_phase(double alpha, const GroupElement& g, cnum z) {
    return 2.0 * alpha * im_scal(z, inverse_origin(g));
}

// j^alpha(g, z) = exp(2 i alpha Im<z, g^{-1}.0>)
inline cnum j_alpha(double alpha, const GroupElement& g, cnum z) {
    return std::polar(1.0, j_alpha_phase(alpha, g, z));
}

// Total phase of J^{nu,mu}(g, z) = j^nu(g, z) j^mu(rho(g), tau(z)).
double J_phase(const AffineTau& tau, const Weights& w, const GroupElement& g, cnum z);

inline cnum J_factor(const AffineTau& tau, const Weights& w, const GroupElement& g, cnum z) {
    return std::polar(1.0, J_phase(tau, w, g, z));
}

// phi^{nu,mu}_rho(g, h) = Im(nu <g^{-1}.0, h.0> + mu <rho(g^{-1}).0, rho(h).0>)
double phase_factor(const AffineTau& tau, const Weights& w,
                    const GroupElement& g, const GroupElement& h);

struct IntegralityResult {
    bool ok;
    std::array<std::array<double, 2>, 2> table; // phi(omega_i, omega_j) / pi
};

// The phase is Z-bilinear on Gamma x Gamma, so generator pairs decide
// integrality for the whole lattice. Tolerance 1e-9 absolute on phi/pi.
IntegralityResult check_integrality(const AffineTau& tau, const Weights& w, const Lattice& lat);

// |J(gh, z) - e^{2 i phi(g,h)} J(g, h.z) J(h, z)|
double chain_rule_residual(const AffineTau& tau, const Weights& w,
                           const GroupElement& g, const GroupElement& h, cnum z);

// [T^{nu,mu}_g f](z) = conj(J(g, z)) f(g.z)
cnum projective_apply(const AffineTau& tau, const Weights& w, const GroupElement& g,
                      const std::function<cnum(cnum)>& f, cnum z);

} // namespace autoforma
