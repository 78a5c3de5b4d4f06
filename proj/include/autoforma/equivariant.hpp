#pragma once

#include <functional>
#include <span>

#include "autoforma/group.hpp"

namespace autoforma {

// The affine family tau(z) = c z + d conj(z) + e.  These are exactly the maps
// equivariant under every plane translation, which is all the lattice ever
// uses; rotation equivariance is checked per element in rho_of.
struct AffineTau {
    cnum c{1.0, 0.0};
    cnum d{0.0, 0.0};
    cnum e{0.0, 0.0};

    cnum operator()(cnum z) const { return c * z + d * std::conj(z) + e; }
};

// rho(g) = [chi(g), psi(g)] as an element of T x| C.
struct RhoImage {
    cnum chi;
    cnum psi;

    GroupElement as_group_element() const { return {chi, psi}; }
};

// Type weights (nu, mu) together with the derived constant
// B = nu + mu (|c|^2 - |d|^2).  B <= 0 is representable; the forms module
// refuses it when a decaying seed is required.
struct Weights {
    double nu;
    double mu;
    double B;
};

// rho restricted to translations: tau(z + t) = tau(z) + (c t + d conj(t)).
inline RhoImage rho_of_translation(const AffineTau& tau, cnum t) {
    return {cnum{1.0, 0.0}, tau.c * t + tau.d * std::conj(t)};
}

// rho on a general element.  chi is pinned by matching the z and conj(z)
// coefficients of tau(a z + b) = chi tau(z) + psi; the e (1 - chi) term makes
// rho a homomorphism on the admitted subgroup.
// Throws NotEquivariant when c != 0, d != 0 and a is not +-1.
RhoImage rho_of(const AffineTau& tau, const GroupElement& g);

// Max residual |tau(g.z) - (chi(g) tau(z) + psi(g))| over all pairs.
double check_equivariance(const AffineTau& tau,
                          std::span<const GroupElement> elements,
                          std::span<const cnum> samples);

// nu, mu > 0 enforced here (the paper's standing assumption).
Weights compute_B(const AffineTau& tau, double nu, double mu);

// Central-difference adapter for a general smooth map C -> C; used only by
// verification paths, never inside form construction.
struct SampledMap {
    std::function<cnum(cnum)> f;
    double h = 1e-5;

    cnum operator()(cnum z) const { return f(z); }
    cnum d_z(cnum z) const;    // Wirtinger d/dz
    cnum d_zbar(cnum z) const; // Wirtinger d/dzbar
};

inline SampledMap sampled(const AffineTau& tau) {
    return {[tau](cnum z) { return tau(z); }, 1e-5};
}

// Constancy certificate for B: max over samples of |B_fd(z) - w.B| where
// B_fd recomputes the weight from finite-difference derivatives.
double b_constancy_certificate(const SampledMap& tau, const Weights& w,
                               std::span<const cnum> samples);

} // namespace autoforma
