#include "autoforma/automorphy.hpp"

#include <cmath>
#include <numbers>

namespace autoforma {

double J_phase(const AffineTau& tau, const Weights& w, const GroupElement& g, cnum z) {
    const RhoImage r = rho_of(tau, g);
    return j_alpha_phase(w.nu, g, z) + j_alpha_phase(w.mu, r.as_group_element(), tau(z));
}

double phase_factor(const AffineTau& tau, const Weights& w,
                    const GroupElement& g, const GroupElement& h) {
    const GroupElement ginv = inverse(g);
    const cnum rho_ginv_0 = act(rho_of(tau, ginv).as_group_element(), cnum{0.0, 0.0});
    const cnum rho_h_0 = act(rho_of(tau, h).as_group_element(), cnum{0.0, 0.0});
    return w.nu * im_scal(act(ginv, cnum{0.0, 0.0}), act(h, cnum{0.0, 0.0})) +
           w.mu * im_scal(rho_ginv_0, rho_h_0);
}

IntegralityResult check_integrality(const AffineTau& tau, const Weights& w, const Lattice& lat) {
    const std::array<cnum, 2> gen = {lat.omega1, lat.omega2};
    IntegralityResult res{true, {}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double phi = phase_factor(tau, w, GroupElement::translation(gen[i]),
                                            GroupElement::translation(gen[j]));
            const double entry = phi / std::numbers::pi;
            res.table[i][j] = entry;
            if (std::abs(entry - std::round(entry)) > 1e-9) res.ok = false;
        }
    }
    return res;
}

double chain_rule_residual(const AffineTau& tau, const Weights& w,
                           const GroupElement& g, const GroupElement& h, cnum z) {
    const cnum lhs = J_factor(tau, w, compose(g, h), z);
    const double phi = phase_factor(tau, w, g, h);
    const cnum rhs = std::polar(1.0, 2.0 * phi) * J_factor(tau, w, g, act(h, z)) *
                     J_factor(tau, w, h, z);
    return std::abs(lhs - rhs);
}

cnum projective_apply(const AffineTau& tau, const Weights& w, const GroupElement& g,
                      const std::function<cnum(cnum)>& f, cnum z) {
    return std::conj(J_factor(tau, w, g, z)) * f(act(g, z));
}

} // namespace autoforma
