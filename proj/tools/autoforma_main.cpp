#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "autoforma/errors.hpp"
#include "autoforma/report.hpp"
#include "autoforma/rng.hpp"

namespace fs = std::filesystem;
using namespace autoforma;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIntegrality = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitResidual = 5;

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    double tol = -1.0;
    long long seed = -1;
};

ExperimentConfig load_with_overrides(const Options& opt) {
    ExperimentConfig cfg = load_config(opt.config_path);
    if (opt.tol >= 0.0) {
        cfg.series.tol = opt.tol;
        if (!(cfg.series.tol > 0.0) || cfg.series.tol > 1e-4)
            throw ValidationError("field 'series.tol' must lie in (0, 1e-4]");
    }
    if (opt.seed >= 0) cfg.probes.rng_seed = static_cast<std::uint64_t>(opt.seed);
    return cfg;
}

void print_integrality(const IntegralityResult& r) {
    std::cout << "integrality table (phi/pi on generator pairs):\n";
    for (int i = 0; i < 2; ++i)
        std::cout << "  [" << format_double(r.table[i][0]) << ", " << format_double(r.table[i][1])
                  << "]\n";
    std::cout << "integrality: " << (r.ok ? "ok" : "VIOLATED") << "\n";
}

int cmd_validate(const ExperimentConfig& cfg) {
    const VerificationReport rep = build_verification_report(cfg);
    std::cout << "equivariance residual: " << format_double(rep.equivariance) << "\n";
    print_integrality(rep.integrality);
    if (rep.equivariance > rep.gates.equivariance) return kExitResidual;
    return rep.integrality.ok ? kExitOk : kExitIntegrality;
}

int cmd_weight(const ExperimentConfig& cfg) {
    const MixedContext ctx = make_context(cfg.tau, cfg.nu, cfg.mu);
    DeterministicRng rng(cfg.probes.rng_seed);
    std::vector<cnum> zs;
    for (int i = 0; i < cfg.probes.count; ++i) zs.push_back(rng.box(cfg.probes.box));
    const double cert = b_constancy_certificate(sampled(cfg.tau), ctx.w, zs);
    std::cout << "B = " << format_double(ctx.w.B) << "\n";
    std::cout << "constancy certificate (finite differences): " << format_double(cert) << "\n";
    return cert <= ReportGates{}.b_constancy ? kExitOk : kExitResidual;
}

int cmd_phi(const ExperimentConfig& cfg, const std::string& out_dir) {
    const MixedContext ctx = make_context(cfg.tau, cfg.nu, cfg.mu);
    const SampledMap tau_s = sampled(cfg.tau);
    DeterministicRng rng(cfg.probes.rng_seed);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const cnum z = rng.box(cfg.probes.box);
        if (std::abs(z) < 1e-6) continue;
        const std::vector<cnum> straight = {cnum{0, 0}, z};
        const std::vector<cnum> elbow = {cnum{0, 0}, cnum{z.real(), 0.0}, z};
        worst = std::max(worst, std::abs(phi_quadrature(tau_s, ctx.w, z, straight) -
                                         phi_quadrature(tau_s, ctx.w, z, elbow)));
    }
    const fs::path csv = fs::path(out_dir) / "phi_grid.csv";
    write_text_file(csv.string(), phi_grid_csv(cfg));
    std::cout << "phi grid written: " << csv.string() << "\n";
    std::cout << "path-independence residual: " << format_double(worst) << "\n";
    return worst <= ReportGates{}.phi_path_independence ? kExitOk : kExitResidual;
}

int cmd_character(const ExperimentConfig& cfg) {
    const MixedContext ctx = make_context(cfg.tau, cfg.nu, cfg.mu);
    const Lattice lat = cfg.lattice();
    const CharacterTable table = character_table(ctx.tau, ctx.w, ctx.phi, lat);
    std::cout << "chi(omega1) = " << format_double(table.chi_omega1.real()) << " + "
              << format_double(table.chi_omega1.imag()) << " i\n";
    std::cout << "chi(omega2) = " << format_double(table.chi_omega2.real()) << " + "
              << format_double(table.chi_omega2.imag()) << " i\n";
    const double res = pseudo_char_residual(ctx.tau, ctx.w, ctx.phi, lat, 5);
    std::cout << "pseudo-character residual (range 5): " << format_double(res) << "\n";
    return res <= ReportGates{}.pseudo_character ? kExitOk : kExitResidual;
}

int cmd_build(const ExperimentConfig& cfg, const std::string& out_dir) {
    const MixedContext ctx = make_context(cfg.tau, cfg.nu, cfg.mu);
    const FormEvaluator landau = build_landau_form(cfg, ctx);
    const double nontriv = nontriviality_scan(landau, cfg.lattice(), 32);

    std::ostringstream meta;
    meta << "{\n";
    meta << "  \"kind\": \"landau\",\n";
    meta << "  \"B\": " << format_double(landau.B) << ",\n";
    meta << "  \"truncation_radius\": " << format_double(landau.truncation_radius) << ",\n";
    meta << "  \"seed_center\": [" << format_double(landau.seed_center.real()) << ", "
         << format_double(landau.seed_center.imag()) << "],\n";
    meta << "  \"chi_omega1\": [" << format_double(landau.character.chi_omega1.real()) << ", "
         << format_double(landau.character.chi_omega1.imag()) << "],\n";
    meta << "  \"chi_omega2\": [" << format_double(landau.character.chi_omega2.real()) << ", "
         << format_double(landau.character.chi_omega2.imag()) << "],\n";
    meta << "  \"nontriviality_max_abs\": " << format_double(nontriv) << "\n";
    meta << "}\n";
    const fs::path path = fs::path(out_dir) / "form_meta.json";
    write_text_file(path.string(), meta.str());
    std::cout << "landau and mixed forms constructed; metadata written: " << path.string() << "\n";
    return kExitOk;
}

int cmd_verify(const ExperimentConfig& cfg, const std::string& out_dir) {
    const VerificationReport rep = build_verification_report(cfg);
    const fs::path path = fs::path(out_dir) / "report.json";
    write_text_file(path.string(), report_to_json(rep));

    for (const StageTiming& t : rep.timings)
        std::cout << "stage " << t.name << ": " << t.ms << " ms\n";
    std::cout << "report written: " << path.string() << "\n";
    std::cout << "pass: " << (rep.pass() ? "true" : "false") << "\n";

    if (!rep.integrality.ok) {
        print_integrality(rep.integrality);
        return kExitIntegrality;
    }
    return rep.pass() ? kExitOk : kExitResidual;
}

int cmd_sample(const ExperimentConfig& cfg, const std::string& out_dir) {
    const MixedContext ctx = make_context(cfg.tau, cfg.nu, cfg.mu);
    const FormEvaluator landau = build_landau_form(cfg, ctx);
    const fs::path path = fs::path(out_dir) / "form_grid.csv";
    write_text_file(path.string(), form_grid_csv(cfg, landau));
    std::cout << "form grid written: " << path.string() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar mixed automorphic forms: verification toolkit"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> names = {"validate", "weight",  "phi",   "character",
                                            "build",    "verify",  "sample"};
    for (const std::string& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", opt.config_path, "experiment config (JSON)")->required();
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--tol", opt.tol, "override series.tol");
        sub->add_option("--seed", opt.seed, "override probes.rng_seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        const ExperimentConfig cfg = load_with_overrides(opt);
        fs::create_directories(opt.out_dir);
        if (cmd == "validate") return cmd_validate(cfg);
        if (cmd == "weight") return cmd_weight(cfg);
        if (cmd == "phi") return cmd_phi(cfg, opt.out_dir);
        if (cmd == "character") return cmd_character(cfg);
        if (cmd == "build") return cmd_build(cfg, opt.out_dir);
        if (cmd == "verify") return cmd_verify(cfg, opt.out_dir);
        if (cmd == "sample") return cmd_sample(cfg, opt.out_dir);
        std::cerr << "unknown subcommand: " << cmd << "\n";
        return kExitConfig;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NotEquivariant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IntegralityViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIntegrality;
    } catch (const NumericallyVanishing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const QuadratureUnconverged& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const NonPositiveWeight& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ResidualOverTolerance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResidual;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
