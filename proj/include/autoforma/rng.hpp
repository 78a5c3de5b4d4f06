#pragma once

#include <cstdint>
#include <random>

#include "autoforma/group.hpp"

namespace autoforma {

// mt19937_64 with a hand-rolled uniform mapping; std distributions are
// implementation-defined and would break byte-identical reports.
class DeterministicRng {
  public:
    explicit DeterministicRng(std::uint64_t seed) : eng_(seed) {}

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    int uniform_int(int lo, int hi) { // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    cnum box(double half_width) {
        const double re = uniform(-half_width, half_width);
        const double im = uniform(-half_width, half_width);
        return {re, im};
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace autoforma
