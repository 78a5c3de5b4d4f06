#include "autoforma/lattice.hpp"

#include <cmath>

namespace autoforma {

std::vector<LatticePoint> enumerate_points(const Lattice& lat, double radius) {
    if (radius < 0.0) throw std::invalid_argument("enumerate_points: radius must be >= 0");

    // gamma = m w1 + n w2  =>  m = Im(gamma conj(w2)) / Im(w1 conj(w2)),
    // n = -Im(gamma conj(w1)) / Im(w1 conj(w2)).  With |gamma| <= R this
    // bounds |m| by R |w2| / area and |n| by R |w1| / area.
    const double area = cell_area(lat);
    const int m_max = static_cast<int>(std::floor(radius * std::abs(lat.omega2) / area)) + 1;
    const int n_max = static_cast<int>(std::floor(radius * std::abs(lat.omega1) / area)) + 1;

    std::vector<LatticePoint> points;
    points.reserve(static_cast<std::size_t>((2 * m_max + 1)) * (2 * n_max + 1) / 2 + 1);
    for (int m = -m_max; m <= m_max; ++m) {
        for (int n = -n_max; n <= n_max; ++n) {
            const cnum gamma = static_cast<double>(m) * lat.omega1 + static_cast<double>(n) * lat.omega2;
            if (std::abs(gamma) <= radius) points.push_back({gamma, m, n});
        }
    }
    return points;
}

} // namespace autoforma
