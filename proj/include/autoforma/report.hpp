#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autoforma/config.hpp"
#include "autoforma/forms.hpp"

namespace autoforma {

// Residual gates, pinned once. Exit code 0 means every computed residual is
// at or under its gate.
struct ReportGates {
    double equivariance = 1e-12;
    double b_constancy = 1e-8;
    double chain_rule = 1e-12;
    double phi_path_independence = 1e-10;
    double phi_pde = 1e-6;
    double psi_reduction = 1e-6;
    double chi_hat_spread = 1e-11;
    double pseudo_character = 1e-11;
    double landau = 1e-8;
    double mixed = 1e-8;
    double nontriviality_floor = 1e-6;
};

struct StageTiming {
    std::string name;
    double ms;
};

struct VerificationReport {
    ExperimentConfig cfg;
    ReportGates gates{};

    double B = 0.0;
    double equivariance = 0.0;
    double b_constancy = 0.0;
    IntegralityResult integrality{};
    double chain_rule = 0.0;
    double phi_path_independence = 0.0;
    double phi_pde = 0.0;
    double psi_reduction = 0.0;
    CharacterTable character{};
    double chi_hat_spread = 0.0;
    double pseudo_character = 0.0;

    bool forms_built = false;
    double landau = 0.0;
    double mixed = 0.0;
    double nontriviality = 0.0;

    // stdout only; the serialized report stays byte-identical across runs
    std::vector<StageTiming> timings;

    bool residuals_pass() const;
    bool pass() const { return integrality.ok && forms_built && residuals_pass(); }
};

// Runs every stage that is computable for the config. Throws only for
// failures other than integrality (which is recorded in the report so the
// caller can still write it and exit 3).
VerificationReport build_verification_report(const ExperimentConfig& cfg);

std::string report_to_json(const VerificationReport& report);
void write_text_file(const std::string& path, const std::string& content);

// CSV grids over the fundamental cell, %.17g columns.
std::string phi_grid_csv(const ExperimentConfig& cfg);
std::string form_grid_csv(const ExperimentConfig& cfg, const FormEvaluator& F);

// Shared construction helper for the build/verify/sample subcommands.
FormEvaluator build_landau_form(const ExperimentConfig& cfg, const MixedContext& ctx);

std::string format_double(double v); // %.17g

} // namespace autoforma
