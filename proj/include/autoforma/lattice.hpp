#pragma once

#include <vector>

#include "autoforma/group.hpp"

namespace autoforma {

// Uniform lattice Gamma = Z omega1 + Z omega2.
struct Lattice {
    cnum omega1;
    cnum omega2;

    Lattice(cnum w1, cnum w2) : omega1(w1), omega2(w2) {
        if (std::abs(std::imag(std::conj(omega1) * omega2)) <= 1e-12)
            throw std::invalid_argument("Lattice: generators are collinear");
    }
};

inline double cell_area(const Lattice& lat) {
    return std::abs(std::imag(std::conj(lat.omega1) * lat.omega2));
}

struct LatticePoint {
    cnum gamma;
    int m;
    int n;
};

// All gamma = m omega1 + n omega2 with |gamma| <= radius, in lexicographic
// (m, n) order. Bounds come from the inverse basis, so skew cells are handled
// without guesswork.
std::vector<LatticePoint> enumerate_points(const Lattice& lat, double radius);

} // namespace autoforma
