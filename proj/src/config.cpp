#include "autoforma/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numbers>
#include <sstream>

#include "autoforma/errors.hpp"
#include "json.hpp"

namespace autoforma {

namespace {

using nlohmann::json;

double to_double(const std::string& text, const std::string& field) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ValidationError("field '" + field + "': cannot parse number from \"" + text + "\"");
    }
}

cnum get_complex(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("field '" + field + "': expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

double get_angle(const json& j, const std::string& field) {
    if (j.is_number()) return j.get<double>();
    if (!j.is_string())
        throw ValidationError("field '" + field + "': expected a number or a pi expression");
    return parse_pi_expression(j.get<std::string>(), field);
}

} // namespace

double parse_pi_expression(const std::string& text, const std::string& field) {
    std::string s;
    for (const char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s.empty()) throw ValidationError("field '" + field + "': empty value");

    const std::size_t p = s.find("pi");
    if (p == std::string::npos) return to_double(s, field);

    std::string coef = s.substr(0, p);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double c = 1.0;
    if (coef == "-")
        c = -1.0;
    else if (!coef.empty() && coef != "+")
        c = to_double(coef, field);

    const std::string rest = s.substr(p + 2);
    double denom = 1.0;
    if (!rest.empty()) {
        if (rest[0] != '/')
            throw ValidationError("field '" + field + "': expected [coef][*]pi[/denom], got \"" + text + "\"");
        denom = to_double(rest.substr(1), field);
        if (denom == 0.0) throw ValidationError("field '" + field + "': division by zero");
    }
    return c * std::numbers::pi / denom;
}

ExperimentConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config parse error: ") + e.what());
    }

    ExperimentConfig cfg;
    try {
        if (!j.contains("nu")) throw ValidationError("field 'nu' is required");
        if (!j.contains("mu")) throw ValidationError("field 'mu' is required");
        cfg.nu = get_angle(j.at("nu"), "nu");
        cfg.mu = get_angle(j.at("mu"), "mu");

        if (!j.contains("lattice")) throw ValidationError("field 'lattice' is required");
        cfg.omega1 = get_complex(j.at("lattice").at("omega1"), "lattice.omega1");
        cfg.omega2 = get_complex(j.at("lattice").at("omega2"), "lattice.omega2");

        if (!j.contains("tau")) throw ValidationError("field 'tau' is required");
        const json& t = j.at("tau");
        cfg.tau.c = t.contains("c") ? get_complex(t.at("c"), "tau.c") : cnum{1.0, 0.0};
        cfg.tau.d = t.contains("d") ? get_complex(t.at("d"), "tau.d") : cnum{0.0, 0.0};
        cfg.tau.e = t.contains("e") ? get_complex(t.at("e"), "tau.e") : cnum{0.0, 0.0};

        if (j.contains("series")) {
            const json& s = j.at("series");
            if (s.contains("tol")) cfg.series.tol = s.at("tol").get<double>();
            if (s.contains("max_radius")) cfg.series.max_radius = s.at("max_radius").get<double>();
        }
        if (j.contains("probes")) {
            const json& p = j.at("probes");
            if (p.contains("count")) cfg.probes.count = p.at("count").get<int>();
            if (p.contains("rng_seed")) cfg.probes.rng_seed = p.at("rng_seed").get<std::uint64_t>();
            if (p.contains("box")) cfg.probes.box = p.at("box").get<double>();
        }
        if (j.contains("grid")) {
            const json& g = j.at("grid");
            if (g.contains("nx")) cfg.grid.nx = g.at("nx").get<int>();
            if (g.contains("ny")) cfg.grid.ny = g.at("ny").get<int>();
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config structure error: ") + e.what());
    }

    if (!(cfg.nu > 0.0)) throw ValidationError("field 'nu' must be > 0");
    if (!(cfg.mu > 0.0)) throw ValidationError("field 'mu' must be > 0");
    if (std::abs(std::imag(std::conj(cfg.omega1) * cfg.omega2)) <= 1e-12)
        throw ValidationError("field 'lattice.omega2': generators are collinear");
    if (!(cfg.series.tol > 0.0) || cfg.series.tol > 1e-4)
        throw ValidationError("field 'series.tol' must lie in (0, 1e-4]");
    if (!(cfg.series.max_radius > 0.0))
        throw ValidationError("field 'series.max_radius' must be > 0");
    if (cfg.probes.count < 1) throw ValidationError("field 'probes.count' must be >= 1");
    if (!(cfg.probes.box > 0.0)) throw ValidationError("field 'probes.box' must be > 0");
    if (cfg.grid.nx < 1 || cfg.grid.ny < 1)
        throw ValidationError("field 'grid': nx and ny must be >= 1");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("config file not readable: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace autoforma
