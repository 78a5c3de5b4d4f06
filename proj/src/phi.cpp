#include "autoforma/phi.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "autoforma/errors.hpp"
#include "autoforma/quadrature.hpp"

namespace autoforma {

namespace {

constexpr double kQuadTol = 1e-10;
constexpr cnum kI{0.0, 1.0};

// Richardson-extrapolated Wirtinger derivatives at a coarse step. Central
// differencing at h = 1e-5 leaves rounding noise eps |f| / h ~ 1e-10 in the
// integrand, which the line integral accumulates past the 1e-10 agreement
// target; a 1e-3 step with one halving is rounding-limited near 1e-12 and
// the h^4 truncation term stays negligible for smooth tau.
struct Wirtinger {
    cnum dz;
    cnum dzbar;
};

Wirtinger wirtinger_rich(const std::function<cnum(cnum)>& f, cnum z, double h) {
    auto stencil = [&](double s) -> Wirtinger {
        const cnum fx = (f(z + cnum{s, 0.0}) - f(z - cnum{s, 0.0})) / (2.0 * s);
        const cnum fy = (f(z + cnum{0.0, s}) - f(z - cnum{0.0, s})) / (2.0 * s);
        return {0.5 * (fx - kI * fy), 0.5 * (fx + kI * fy)};
    };
    const Wirtinger coarse = stencil(h);
    const Wirtinger fine = stencil(h / 2.0);
    return {(4.0 * fine.dz - coarse.dz) / 3.0, (4.0 * fine.dzbar - coarse.dzbar) / 3.0};
}

double quad_with_refinement(const std::function<cnum(cnum)>& rhs, std::span<const cnum> path,
                            double max_panel) {
    const double coarse = integrate_form_polyline(rhs, path, max_panel);
    const double fine = integrate_form_polyline(rhs, path, max_panel / 2.0);
    if (std::abs(fine - coarse) > kQuadTol)
        throw QuadratureUnconverged("phi quadrature: node doubling moved the integral by " +
                                    std::to_string(std::abs(fine - coarse)));
    return fine;
}

} // namespace

double PhiSolution::operator()(cnum z) const {
    if (closed_form) return -2.0 * mu * std::imag(std::conj(kappa) * z);
    const double max_panel = static_cast<double>(rule_order) / static_cast<double>(nodes_per_unit);
    const std::array<cnum, 2> path = {cnum{0.0, 0.0}, z};
    return quad_with_refinement(rhs, path, max_panel);
}

cnum phi_rhs(const AffineTau& tau, const Weights& w, cnum /*z*/) {
    const cnum kappa = std::conj(tau.c) * tau.e - tau.d * std::conj(tau.e);
    return -kI * w.mu * kappa;
}

cnum phi_rhs(const SampledMap& tau, const Weights& w, cnum z) {
    const cnum tv = tau(z);
    const Wirtinger d = wirtinger_rich(tau.f, z, 1e-3);
    const cnum tz = d.dz;
    const cnum tzb = d.dzbar;
    // tau dtaubar/dzbar = tau conj(dtau/dz); taubar dtau/dzbar = conj(tau) dtau/dzbar
    const cnum bracket = tv * std::conj(tz) - std::conj(tv) * tzb -
                         (std::norm(tz) - std::norm(tzb)) * z;
    return -kI * w.mu * bracket;
}

PhiSolution phi_affine(const AffineTau& tau, const Weights& w) {
    PhiSolution sol;
    sol.kappa = std::conj(tau.c) * tau.e - tau.d * std::conj(tau.e);
    sol.mu = w.mu;
    sol.closed_form = true;
    return sol;
}

PhiSolution phi_sampled(const SampledMap& tau, const Weights& w) {
    PhiSolution sol;
    sol.mu = w.mu;
    sol.closed_form = false;
    sol.rhs = [tau, w](cnum z) { return phi_rhs(tau, w, z); };
    return sol;
}

double phi_quadrature(const SampledMap& tau, const Weights& w, cnum z,
                      std::span<const cnum> path) {
    if (path.size() < 2) throw std::invalid_argument("phi_quadrature: path needs >= 2 vertices");
    if (std::abs(path.front()) > 1e-12)
        throw std::invalid_argument("phi_quadrature: path must start at 0");
    if (std::abs(path.back() - z) > 1e-12)
        throw std::invalid_argument("phi_quadrature: path must end at z");
    auto rhs = [&tau, &w](cnum p) { return phi_rhs(tau, w, p); };
    return quad_with_refinement(rhs, path, 0.5);
}

double psi_reduction_residual(const AffineTau& tau, const Weights& w, const PhiSolution& phi,
                              std::span<const cnum> samples) {
    const double b_minus_nu = w.B - w.nu;
    auto psi = [&](cnum z) -> cnum {
        const cnum phit = cnum{phi(z), 0.0};
        return (phit - kI * (b_minus_nu * std::norm(z) - w.mu * std::norm(tau(z)))) /
               (2.0 * kI * w.mu);
    };
    const SampledMap psi_map{psi, 1e-5};

    double worst = 0.0;
    for (const cnum z : samples) {
        const cnum tb = std::conj(tau(z));
        const cnum r1 = psi_map.d_zbar(z) - tb * tau.d;
        const cnum r2 = psi_map.d_z(z) - ((w.nu - w.B) / w.mu) * std::conj(z) - tb * tau.c;
        worst = std::max({worst, std::abs(r1), std::abs(r2)});
    }
    return worst;
}

double chi_tau_phase(const AffineTau& tau, const Weights& w, const PhiSolution& phi, cnum gamma) {
    const GroupElement rho_gamma = rho_of_translation(tau, gamma).as_group_element();
    const cnum a_gamma = inverse_origin(rho_gamma);
    return phi(gamma) + 2.0 * w.mu * im_scal(tau(cnum{0.0, 0.0}), a_gamma);
}

cnum chi_tau(const AffineTau& tau, const Weights& w, const PhiSolution& phi, cnum gamma) {
    return std::polar(1.0, chi_tau_phase(tau, w, phi, gamma));
}

cnum chi_hat(const AffineTau& tau, const Weights& w, const PhiSolution& phi, cnum z, cnum gamma) {
    const GroupElement rho_gamma = rho_of_translation(tau, gamma).as_group_element();
    const cnum a_gamma = inverse_origin(rho_gamma);
    const double phase = phi(z + gamma) - phi(z) +
                         2.0 * ((w.B - w.nu) * im_scal(z, gamma) +
                                w.mu * im_scal(tau(z), a_gamma));
    return std::polar(1.0, phase);
}

double chi_hat_residual(const AffineTau& tau, const Weights& w, const PhiSolution& phi,
                        cnum gamma, std::span<const cnum> zs) {
    const cnum at_zero = chi_hat(tau, w, phi, cnum{0.0, 0.0}, gamma);
    if (std::abs(at_zero - chi_tau(tau, w, phi, gamma)) > 1e-12)
        throw Error("chi_hat_residual: chi_hat(0;gamma) disagrees with chi_tau(gamma)");
    double worst = 0.0;
    for (const cnum z : zs)
        worst = std::max(worst, std::abs(chi_hat(tau, w, phi, z, gamma) - at_zero));
    return worst;
}

double pseudo_char_residual(const AffineTau& tau, const Weights& w, const PhiSolution& phi,
                            const Lattice& lat, int range) {
    if (range < 0) throw std::invalid_argument("pseudo_char_residual: range must be >= 0");
    // chi on the (m, n) grid wide enough to hold gamma + gamma'.
    const int wide = 2 * range;
    const int side = 2 * wide + 1;
    std::vector<cnum> chi_grid(static_cast<std::size_t>(side) * side);
    for (int m = -wide; m <= wide; ++m)
        for (int n = -wide; n <= wide; ++n) {
            const cnum gamma = static_cast<double>(m) * lat.omega1 + static_cast<double>(n) * lat.omega2;
            chi_grid[static_cast<std::size_t>(m + wide) * side + (n + wide)] =
                chi_tau(tau, w, phi, gamma);
        }
    auto chi_at = [&](int m, int n) {
        return chi_grid[static_cast<std::size_t>(m + wide) * side + (n + wide)];
    };

    double worst = 0.0;
    for (int m = -range; m <= range; ++m)
        for (int n = -range; n <= range; ++n)
            for (int mp = -range; mp <= range; ++mp)
                for (int np = -range; np <= range; ++np) {
                    const cnum g = static_cast<double>(m) * lat.omega1 + static_cast<double>(n) * lat.omega2;
                    const cnum gp = static_cast<double>(mp) * lat.omega1 + static_cast<double>(np) * lat.omega2;
                    const cnum lhs = chi_at(m + mp, n + np);
                    const cnum rhs = std::polar(1.0, 2.0 * w.B * im_scal(g, gp)) *
                                     chi_at(m, n) * chi_at(mp, np);
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return worst;
}

CharacterTable character_table(const AffineTau& tau, const Weights& w, const PhiSolution& phi,
                               const Lattice& lat) {
    return {chi_tau(tau, w, phi, lat.omega1), chi_tau(tau, w, phi, lat.omega2), w.B};
}

} // namespace autoforma
