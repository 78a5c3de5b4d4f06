#pragma once

#include <stdexcept>
#include <string>

namespace autoforma {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// tau admits no rotation component chi for the given group element.
struct NotEquivariant : Error {
    using Error::Error;
};

// phi/pi is not integral on the generator pairs; lattice averaging refused.
struct IntegralityViolated : Error {
    using Error::Error;
};

// Poincare average collapsed below detection on the fundamental cell.
struct NumericallyVanishing : Error {
    using Error::Error;
};

struct QuadratureUnconverged : Error {
    using Error::Error;
};

// B <= 0: no decaying Gaussian seed exists.
struct NonPositiveWeight : Error {
    using Error::Error;
};

struct ResidualOverTolerance : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : ConfigError {
    using ConfigError::ConfigError;
};

struct ValidationError : ConfigError {
    using ConfigError::ConfigError;
};

} // namespace autoforma
