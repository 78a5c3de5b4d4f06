#pragma once

#include <cstdint>
#include <string>

#include "autoforma/equivariant.hpp"
#include "autoforma/lattice.hpp"

namespace autoforma {

struct SeriesConfig {
    double tol = 1e-10;
    double max_radius = 40.0;
};

struct ProbeConfig {
    int count = 50;
    std::uint64_t rng_seed = 42;
    double box = 2.0;
};

struct GridConfig {
    int nx = 32;
    int ny = 32;
};

struct ExperimentConfig {
    double nu = 0.0;
    double mu = 0.0;
    cnum omega1{1.0, 0.0};
    cnum omega2{0.0, 1.0};
    AffineTau tau{};
    SeriesConfig series{};
    ProbeConfig probes{};
    GridConfig grid{};

    Lattice lattice() const { return {omega1, omega2}; }
};

// "pi", "pi/2", "3pi/4", "2*pi/3", "0.5pi", or a plain numeric string.
double parse_pi_expression(const std::string& text, const std::string& field);

// Parses and validates a JSON config file. ParseError for malformed input
// (with position info), ValidationError naming the offending field.
ExperimentConfig load_config(const std::string& path);

ExperimentConfig parse_config_text(const std::string& text);

} // namespace autoforma
