#include "autoforma/equivariant.hpp"

#include <algorithm>
#include <cmath>

#include "autoforma/errors.hpp"

namespace autoforma {

namespace {
constexpr double kRealRotationTol = 1e-12;
}

RhoImage rho_of(const AffineTau& tau, const GroupElement& g) {
    cnum chi;
    if (std::abs(tau.d) == 0.0) {
        chi = g.a;
    } else if (std::abs(tau.c) == 0.0) {
        chi = std::conj(g.a);
    } else if (std::abs(g.a - 1.0) <= kRealRotationTol || std::abs(g.a + 1.0) <= kRealRotationTol) {
        chi = g.a;
    } else {
        throw NotEquivariant("rho_of: rotation part admits no chi (c != 0, d != 0, a not real)");
    }
    const cnum psi = tau.c * g.b + tau.d * std::conj(g.b) + tau.e * (1.0 - chi);
    return {chi, psi};
}

double check_equivariance(const AffineTau& tau,
                          std::span<const GroupElement> elements,
                          std::span<const cnum> samples) {
    double worst = 0.0;
    for (const auto& g : elements) {
        const RhoImage r = rho_of(tau, g);
        for (const cnum z : samples) {
            const cnum lhs = tau(act(g, z));
            const cnum rhs = r.chi * tau(z) + r.psi;
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

Weights compute_B(const AffineTau& tau, double nu, double mu) {
    if (!(nu > 0.0)) throw std::invalid_argument("compute_B: nu must be > 0");
    if (!(mu > 0.0)) throw std::invalid_argument("compute_B: mu must be > 0");
    const double b = nu + mu * (std::norm(tau.c) - std::norm(tau.d));
    return {nu, mu, b};
}

cnum SampledMap::d_z(cnum z) const {
    const cnum fx = (f(z + cnum{h, 0.0}) - f(z - cnum{h, 0.0})) / (2.0 * h);
    const cnum fy = (f(z + cnum{0.0, h}) - f(z - cnum{0.0, h})) / (2.0 * h);
    return 0.5 * (fx - cnum{0.0, 1.0} * fy);
}

cnum SampledMap::d_zbar(cnum z) const {
    const cnum fx = (f(z + cnum{h, 0.0}) - f(z - cnum{h, 0.0})) / (2.0 * h);
    const cnum fy = (f(z + cnum{0.0, h}) - f(z - cnum{0.0, h})) / (2.0 * h);
    return 0.5 * (fx + cnum{0.0, 1.0} * fy);
}

double b_constancy_certificate(const SampledMap& tau, const Weights& w,
                               std::span<const cnum> samples) {
    double worst = 0.0;
    for (const cnum z : samples) {
        const double b_fd = w.nu + w.mu * (std::norm(tau.d_z(z)) - std::norm(tau.d_zbar(z)));
        worst = std::max(worst, std::abs(b_fd - w.B));
    }
    return worst;
}

} // namespace autoforma
