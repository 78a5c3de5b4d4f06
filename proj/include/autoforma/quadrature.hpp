#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <span>

#include "autoforma/group.hpp"

namespace autoforma {

struct GaussNode {
    double x;
    double w;
};

// 16-point Gauss-Legendre rule on [-1, 1]; exact through degree 31.
inline constexpr std::array<GaussNode, 16> kGauss16 = {{
    {-0.9894009349916499, 0.027152459411754037},
    {-0.9445750230732326, 0.062253523938647706},
    {-0.8656312023878318, 0.09515851168249259},
    {-0.755404408355003, 0.12462897125553403},
    {-0.6178762444026438, 0.14959598881657676},
    {-0.45801677765722737, 0.16915651939500262},
    {-0.2816035507792589, 0.1826034150449236},
    {-0.09501250983763745, 0.18945061045506859},
    {0.09501250983763745, 0.18945061045506859},
    {0.2816035507792589, 0.1826034150449236},
    {0.45801677765722737, 0.16915651939500262},
    {0.6178762444026438, 0.14959598881657676},
    {0.755404408355003, 0.12462897125553403},
    {0.8656312023878318, 0.09515851168249259},
    {0.9445750230732326, 0.062253523938647706},
    {0.9894009349916499, 0.027152459411754037},
}};

// Integral of the real 1-form 2 Re(conj(S(w)) dw) along one straight segment,
// split into panels of length at most max_panel.
inline double integrate_form_segment(const std::function<cnum(cnum)>& S, cnum w0, cnum w1,
                                     double max_panel) {
    const double len = std::abs(w1 - w0);
    if (len == 0.0) return 0.0;
    const int panels = std::max(1, static_cast<int>(std::ceil(len / max_panel)));
    const cnum step = (w1 - w0) / static_cast<double>(panels);
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const cnum a = w0 + static_cast<double>(p) * step;
        for (const auto& node : kGauss16) {
            const cnum w = a + 0.5 * (node.x + 1.0) * step;
            total += node.w * 0.5 * 2.0 * std::real(std::conj(S(w)) * step);
        }
    }
    return total;
}

inline double integrate_form_polyline(const std::function<cnum(cnum)>& S,
                                      std::span<const cnum> path, double max_panel) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        total += integrate_form_segment(S, path[i], path[i + 1], max_panel);
    return total;
}

} // namespace autoforma
