#include "doctest.h"

#include <numbers>
#include <string>

#include "autoforma/config.hpp"
#include "autoforma/errors.hpp"

using namespace autoforma;

namespace {
const std::string kMinimal = R"({
  "nu": "pi/2", "mu": "pi/2",
  "lattice": {"omega1": [1, 0], "omega2": [0, 1]},
  "tau": {"c": [1, 0]}
})";
} // namespace

TEST_CASE("minimal config loads with defaults") {
    const ExperimentConfig cfg = parse_config_text(kMinimal);
    CHECK(cfg.nu == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
    CHECK(cfg.mu == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
    CHECK(cfg.series.tol == 1e-10);
    CHECK(cfg.series.max_radius == 40.0);
    CHECK(cfg.probes.count == 50);
    CHECK(cfg.probes.box == 2.0);
    CHECK(cfg.grid.nx == 32);
    CHECK(std::abs(cfg.tau.c - cnum{1, 0}) == 0.0);
    CHECK(std::abs(cfg.tau.d) == 0.0);
    CHECK(std::abs(cfg.tau.e) == 0.0);
}

TEST_CASE("pi expression forms") {
    CHECK(parse_pi_expression("pi", "x") == doctest::Approx(std::numbers::pi).epsilon(1e-16));
    CHECK(parse_pi_expression("pi/2", "x") == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
    CHECK(parse_pi_expression("3pi/4", "x") == doctest::Approx(3 * std::numbers::pi / 4).epsilon(1e-16));
    CHECK(parse_pi_expression("2*pi/3", "x") == doctest::Approx(2 * std::numbers::pi / 3).epsilon(1e-16));
    CHECK(parse_pi_expression("0.5pi", "x") == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
    CHECK(parse_pi_expression("-pi/2", "x") == doctest::Approx(-std::numbers::pi / 2).epsilon(1e-16));
    CHECK(parse_pi_expression("1.25", "x") == doctest::Approx(1.25).epsilon(1e-16));
    CHECK_THROWS_AS(parse_pi_expression("pi2", "x"), ValidationError);
    CHECK_THROWS_AS(parse_pi_expression("pi/0", "x"), ValidationError);
    CHECK_THROWS_AS(parse_pi_expression("twopi", "x"), ValidationError);
}

TEST_CASE("validation failures name the field") {
    const std::string mu_zero = R"({
      "nu": "pi/2", "mu": 0,
      "lattice": {"omega1": [1, 0], "omega2": [0, 1]},
      "tau": {"c": [1, 0]}
    })";
    try {
        parse_config_text(mu_zero);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("mu") != std::string::npos);
    }

    const std::string collinear = R"({
      "nu": 1, "mu": 1,
      "lattice": {"omega1": [1, 0], "omega2": [2, 0]},
      "tau": {}
    })";
    try {
        parse_config_text(collinear);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("collinear") != std::string::npos);
    }

    const std::string bad_tol = R"({
      "nu": 1, "mu": 1,
      "lattice": {"omega1": [1, 0], "omega2": [0, 1]},
      "tau": {}, "series": {"tol": 1e-3}
    })";
    CHECK_THROWS_AS(parse_config_text(bad_tol), ValidationError);

    const std::string bad_count = R"({
      "nu": 1, "mu": 1,
      "lattice": {"omega1": [1, 0], "omega2": [0, 1]},
      "tau": {}, "probes": {"count": 0}
    })";
    CHECK_THROWS_AS(parse_config_text(bad_count), ValidationError);
}

TEST_CASE("malformed json raises ParseError") {
    CHECK_THROWS_AS(parse_config_text("{ not json"), ParseError);
    CHECK_THROWS_AS(load_config("/nonexistent/path.json"), ParseError);
}
