#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace autoforma {

using cnum = std::complex<double>;

inline constexpr double kUnitModulusTol = 1e-14;

// Element (a, b) of the semidirect group T x| C, acting on the plane by
// z -> a z + b with |a| = 1.
struct GroupElement {
    cnum a{1.0, 0.0};
    cnum b{0.0, 0.0};

    GroupElement() = default;

    GroupElement(cnum rotation, cnum translation) : a(rotation), b(translation) {
        if (std::abs(std::abs(a) - 1.0) > kUnitModulusTol)
            throw std::invalid_argument("GroupElement: rotation part must be unit modulus");
        if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
            throw std::invalid_argument("GroupElement: translation part must be finite");
    }

    static GroupElement identity() { return {}; }

    // Pure lattice translation (1, t).
    static GroupElement translation(cnum t) { return {cnum{1.0, 0.0}, t}; }
};

inline cnum act(const GroupElement& g, cnum z) { return g.a * z + g.b; }

// (a, b)(a', b') = (a a', a b' + b).  The rotation part is renormalized to
// unit modulus so |a| = 1 survives long composition chains.
inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
    cnum a = g.a * h.a;
    a /= std::abs(a);
    return {a, g.a * h.b + g.b};
}

inline GroupElement inverse(const GroupElement& g) {
    const cnum abar = std::conj(g.a);
    return {abar, -abar * g.b};
}

// g^{-1} . 0, the point every automorphy phase is measured against.
inline cnum inverse_origin(const GroupElement& g) { return act(inverse(g), cnum{0.0, 0.0}); }

// Im <z, w> with <z, w> = z conj(w).
inline double im_scal(cnum z, cnum w) { return std::imag(z * std::conj(w)); }

} // namespace autoforma
