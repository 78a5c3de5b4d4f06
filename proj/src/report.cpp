#include "autoforma/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "autoforma/errors.hpp"
#include "autoforma/kernels.hpp"
#include "autoforma/rng.hpp"

namespace autoforma {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

std::vector<cnum> probe_points(const ExperimentConfig& cfg, std::uint64_t salt, int count) {
    DeterministicRng rng(cfg.probes.rng_seed ^ salt);
    std::vector<cnum> zs;
    zs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) zs.push_back(rng.box(cfg.probes.box));
    return zs;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool VerificationReport::residuals_pass() const {
    bool ok = equivariance <= gates.equivariance && b_constancy <= gates.b_constancy &&
              chain_rule <= gates.chain_rule &&
              phi_path_independence <= gates.phi_path_independence &&
              phi_pde <= gates.phi_pde && psi_reduction <= gates.psi_reduction &&
              chi_hat_spread <= gates.chi_hat_spread &&
              pseudo_character <= gates.pseudo_character;
    if (forms_built)
        ok = ok && landau <= gates.landau && mixed <= gates.mixed &&
             nontriviality > gates.nontriviality_floor;
    return ok;
}

FormEvaluator build_landau_form(const ExperimentConfig& cfg, const MixedContext& ctx) {
    const FormEvaluator seed = gaussian_seed(ctx.w.B, cnum{0.0, 0.0});
    return poincare_landau(seed, ctx, cfg.lattice(), cfg.series.tol, cfg.series.max_radius);
}

VerificationReport build_verification_report(const ExperimentConfig& cfg) {
    VerificationReport rep;
    rep.cfg = cfg;
    const Lattice lat = cfg.lattice();
    const MixedContext ctx = make_context(cfg.tau, cfg.nu, cfg.mu);
    rep.B = ctx.w.B;

    auto timed = [&rep](const char* name, auto&& fn) {
        const auto t0 = clock_type::now();
        fn();
        rep.timings.push_back({name, ms_since(t0)});
    };

    timed("validate", [&] {
        std::vector<GroupElement> gens = {GroupElement::translation(lat.omega1),
                                          GroupElement::translation(lat.omega2)};
        DeterministicRng rng(cfg.probes.rng_seed ^ 0x11u);
        for (int i = 0; i < 16; ++i) gens.push_back(GroupElement::translation(rng.box(cfg.probes.box)));
        const auto zs = probe_points(cfg, 0x12u, cfg.probes.count);
        rep.equivariance = check_equivariance(cfg.tau, gens, zs);
        rep.integrality = check_integrality(ctx.tau, ctx.w, lat);
    });

    timed("weight", [&] {
        const auto zs = probe_points(cfg, 0x21u, cfg.probes.count);
        rep.b_constancy = b_constancy_certificate(sampled(cfg.tau), ctx.w, zs);
    });

    timed("chain_rule", [&] {
        DeterministicRng rng(cfg.probes.rng_seed ^ 0x31u);
        const bool rotations_ok = std::abs(cfg.tau.c) == 0.0 || std::abs(cfg.tau.d) == 0.0;
        auto element = [&]() -> GroupElement {
            const double pick = rng.unit();
            if (rotations_ok && pick < 0.3)
                return {std::polar(1.0, rng.uniform(0.0, 6.283185307179586)), rng.box(cfg.probes.box)};
            if (!rotations_ok && pick < 0.3)
                return {cnum{rng.unit() < 0.5 ? 1.0 : -1.0, 0.0}, rng.box(cfg.probes.box)};
            return GroupElement::translation(rng.box(cfg.probes.box));
        };
        double worst = 0.0;
        for (int i = 0; i < cfg.probes.count; ++i)
            worst = std::max(worst, chain_rule_residual(ctx.tau, ctx.w, element(), element(),
                                                        rng.box(cfg.probes.box)));
        rep.chain_rule = worst;
    });

    timed("phi", [&] {
        const SampledMap tau_s = sampled(cfg.tau);
        DeterministicRng rng(cfg.probes.rng_seed ^ 0x41u);
        double worst_path = 0.0;
        for (int i = 0; i < 10; ++i) {
            const cnum z = rng.box(cfg.probes.box);
            if (std::abs(z) < 1e-6) continue;
            const std::vector<cnum> straight = {cnum{0, 0}, z};
            const std::vector<cnum> elbow = {cnum{0, 0}, cnum{z.real(), 0.0}, z};
            worst_path = std::max(worst_path, std::abs(phi_quadrature(tau_s, ctx.w, z, straight) -
                                                       phi_quadrature(tau_s, ctx.w, z, elbow)));
        }
        rep.phi_path_independence = worst_path;

        const auto zs = probe_points(cfg, 0x42u, cfg.probes.count);
        double worst_pde = 0.0;
        const double h = 1e-5;
        for (const cnum z : zs) {
            const double fx = (ctx.phi(z + cnum{h, 0}) - ctx.phi(z - cnum{h, 0})) / (2 * h);
            const double fy = (ctx.phi(z + cnum{0, h}) - ctx.phi(z - cnum{0, h})) / (2 * h);
            const cnum dzbar = 0.5 * (cnum{fx, 0} + cnum{0, 1} * fy);
            worst_pde = std::max(worst_pde, std::abs(dzbar - phi_rhs(cfg.tau, ctx.w, z)));
        }
        rep.phi_pde = worst_pde;
    });

    timed("psi_reduction", [&] {
        const auto zs = probe_points(cfg, 0x51u, cfg.probes.count);
        rep.psi_reduction = psi_reduction_residual(ctx.tau, ctx.w, ctx.phi, zs);
    });

    timed("character", [&] {
        rep.character = character_table(ctx.tau, ctx.w, ctx.phi, lat);
        const auto zs = probe_points(cfg, 0x61u, cfg.probes.count);
        double worst = 0.0;
        for (const cnum gamma : {lat.omega1, lat.omega2, lat.omega1 + lat.omega2})
            worst = std::max(worst, chi_hat_residual(ctx.tau, ctx.w, ctx.phi, gamma, zs));
        rep.chi_hat_spread = worst;
        rep.pseudo_character = pseudo_char_residual(ctx.tau, ctx.w, ctx.phi, lat, 5);
    });

    timed("forms", [&] {
        if (!rep.integrality.ok) {
            rep.forms_built = false;
            return;
        }
        const FormEvaluator landau = build_landau_form(cfg, ctx);
        const FormEvaluator mixed = apply_gauge(ctx.phi, landau, GaugeDirection::inverse);

        DeterministicRng rng(cfg.probes.rng_seed ^ 0x71u);
        std::vector<cnum> zs, gammas;
        for (int i = 0; i < cfg.probes.count; ++i) {
            zs.push_back(rng.box(cfg.probes.box));
            gammas.push_back(static_cast<double>(rng.uniform_int(-3, 3)) * lat.omega1 +
                             static_cast<double>(rng.uniform_int(-3, 3)) * lat.omega2);
        }
        rep.landau = max_over_indices_parallel(
            [&](std::size_t i) { return landau_residual(landau, ctx, zs[i], gammas[i]); },
            zs.size());
        rep.mixed = max_over_indices_parallel(
            [&](std::size_t i) { return mixed_residual(mixed, ctx.tau, ctx.w, zs[i], gammas[i]); },
            zs.size());
        rep.nontriviality = nontriviality_scan(landau, lat, std::max(cfg.grid.nx, cfg.grid.ny));
        rep.forms_built = true;
    });

    return rep;
}

namespace {

void emit_complex(std::ostringstream& out, cnum v) {
    out << '[' << format_double(v.real()) << ", " << format_double(v.imag()) << ']';
}

} // namespace

std::string report_to_json(const VerificationReport& r) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"config\": {\n";
    out << "    \"nu\": " << format_double(r.cfg.nu) << ",\n";
    out << "    \"mu\": " << format_double(r.cfg.mu) << ",\n";
    out << "    \"lattice\": {\"omega1\": ";
    emit_complex(out, r.cfg.omega1);
    out << ", \"omega2\": ";
    emit_complex(out, r.cfg.omega2);
    out << "},\n";
    out << "    \"tau\": {\"c\": ";
    emit_complex(out, r.cfg.tau.c);
    out << ", \"d\": ";
    emit_complex(out, r.cfg.tau.d);
    out << ", \"e\": ";
    emit_complex(out, r.cfg.tau.e);
    out << "},\n";
    out << "    \"series\": {\"tol\": " << format_double(r.cfg.series.tol)
        << ", \"max_radius\": " << format_double(r.cfg.series.max_radius) << "},\n";
    out << "    \"probes\": {\"count\": " << r.cfg.probes.count
        << ", \"rng_seed\": " << r.cfg.probes.rng_seed
        << ", \"box\": " << format_double(r.cfg.probes.box) << "},\n";
    out << "    \"grid\": {\"nx\": " << r.cfg.grid.nx << ", \"ny\": " << r.cfg.grid.ny << "}\n";
    out << "  },\n";
    out << "  \"B\": " << format_double(r.B) << ",\n";
    out << "  \"integrality\": {\"ok\": " << (r.integrality.ok ? "true" : "false")
        << ", \"table_over_pi\": [[" << format_double(r.integrality.table[0][0]) << ", "
        << format_double(r.integrality.table[0][1]) << "], ["
        << format_double(r.integrality.table[1][0]) << ", "
        << format_double(r.integrality.table[1][1]) << "]]},\n";
    out << "  \"residuals\": {\n";
    out << "    \"equivariance\": " << format_double(r.equivariance) << ",\n";
    out << "    \"b_constancy\": " << format_double(r.b_constancy) << ",\n";
    out << "    \"chain_rule\": " << format_double(r.chain_rule) << ",\n";
    out << "    \"phi_path_independence\": " << format_double(r.phi_path_independence) << ",\n";
    out << "    \"phi_pde\": " << format_double(r.phi_pde) << ",\n";
    out << "    \"psi_reduction\": " << format_double(r.psi_reduction) << ",\n";
    out << "    \"chi_hat_spread\": " << format_double(r.chi_hat_spread) << ",\n";
    out << "    \"pseudo_character\": " << format_double(r.pseudo_character);
    if (r.forms_built) {
        out << ",\n    \"landau\": " << format_double(r.landau) << ",\n";
        out << "    \"mixed\": " << format_double(r.mixed);
    }
    out << "\n  },\n";
    out << "  \"character\": {\"chi_omega1\": ";
    emit_complex(out, r.character.chi_omega1);
    out << ", \"chi_omega2\": ";
    emit_complex(out, r.character.chi_omega2);
    out << "},\n";
    out << "  \"forms_built\": " << (r.forms_built ? "true" : "false") << ",\n";
    if (r.forms_built)
        out << "  \"nontriviality_max_abs\": " << format_double(r.nontriviality) << ",\n";
    out << "  \"pass\": " << (r.pass() ? "true" : "false") << "\n";
    out << "}\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << content;
}

std::string phi_grid_csv(const ExperimentConfig& cfg) {
    const MixedContext ctx = make_context(cfg.tau, cfg.nu, cfg.mu);
    const auto pts = cell_grid_points(cfg.lattice(), cfg.grid.nx, cfg.grid.ny);
    std::ostringstream out;
    out << "x,y,phi\n";
    for (const cnum z : pts)
        out << format_double(z.real()) << ',' << format_double(z.imag()) << ','
            << format_double(ctx.phi(z)) << '\n';
    return out.str();
}

std::string form_grid_csv(const ExperimentConfig& cfg, const FormEvaluator& F) {
    const auto pts = cell_grid_points(cfg.lattice(), cfg.grid.nx, cfg.grid.ny);
    const auto values = eval_grid_parallel(F.evaluation, pts);
    std::ostringstream out;
    out << "x,y,re_f,im_f,abs_f\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        out << format_double(pts[i].real()) << ',' << format_double(pts[i].imag()) << ','
            << format_double(values[i].real()) << ',' << format_double(values[i].imag()) << ','
            << format_double(std::abs(values[i])) << '\n';
    return out.str();
}

} // namespace autoforma
