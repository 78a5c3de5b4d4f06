#pragma once

#include <complex>

namespace autoforma {

// Kahan-compensated accumulator. Lattice series are summed in a fixed
// deterministic order, so the compensated result is reproducible bit for bit.
template <typename Value>
struct KahanAccumulator {
    Value sum{};
    Value compensation{};

    void add(Value value) {
        const Value y = value - compensation;
        const Value t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    Value result() const { return sum; }
};

struct KahanComplex {
    KahanAccumulator<double> re;
    KahanAccumulator<double> im;

    void add(std::complex<double> v) {
        re.add(v.real());
        im.add(v.imag());
    }

    std::complex<double> result() const { return {re.result(), im.result()}; }
};

} // namespace autoforma
