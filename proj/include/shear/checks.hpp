#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shear/config.hpp"
#include "shear/conservation.hpp"
#include "shear/evolution.hpp"

namespace shear {
namespace checks {

struct Check {
    std::string name;
    double computed = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    std::string provenance;  // PAPER | TRIVIAL | DERIVED
    bool pass = false;
};

struct VerificationReport {
    std::vector<Check> checks;
    std::string environment;
    std::string config_echo;  // JSON text of the config

    bool overall() const;
    std::string to_json() const;
    void print(std::ostream& out) const;
};

/// Solved artifacts for one homogeneity value.
struct Pipeline {
    config::RunConfig cfg;
    kernels::HomogeneitySetup setup;
    kernels::KernelTable table;
    cutoff::ContinuationResult continuation;
    cutoff::BetaEstimate beta;
    evolution::AsymptoticSolution solution;

    const cutoff::CutoffProfile& profile() const { return continuation.profile; }
};

/// solve + beta + derived curves
Pipeline run_pipeline(const config::RunConfig& cfg);

// individual checks (tolerances resolved through cfg.tol)
Check check_phi_integral(const config::RunConfig& cfg);
Check check_q_right_tail(const config::RunConfig& cfg, double a);
Check check_q_left_tail(const config::RunConfig& cfg, double a);
Check check_cutoff_residual(const config::RunConfig& cfg, const Pipeline& p);
Check check_cutoff_invariants(const config::RunConfig& cfg, const Pipeline& p);
Check check_cutoff_apriori(const config::RunConfig& cfg, const Pipeline& p);
Check check_sigma_to_one(const config::RunConfig& cfg, const Pipeline& p);
Check check_prop74(const config::RunConfig& cfg, const Pipeline& p);
Check check_beta_lower(const config::RunConfig& cfg, const Pipeline& p);
Check check_beta_routes(const config::RunConfig& cfg, const Pipeline& p);
Check check_sigma_star(const config::RunConfig& cfg, const Pipeline& p);
Check check_omega_large(const config::RunConfig& cfg, const Pipeline& p);
Check check_omega_small(const config::RunConfig& cfg, const Pipeline& p);
Check check_w_integral(const config::RunConfig& cfg, const Pipeline& p);
Check check_w0(const config::RunConfig& cfg, const Pipeline& p);
Check check_wtilde_substitution(const config::RunConfig& cfg, const Pipeline& p);
Check check_hbar_routes(const config::RunConfig& cfg, const Pipeline& p);
Check check_hbar_norm(const config::RunConfig& cfg, const Pipeline& p);
Check check_u_integral(const config::RunConfig& cfg, const Pipeline& p);
Check check_u_substitution(const config::RunConfig& cfg, const Pipeline& p);
Check check_c0_closed_form(const config::RunConfig& cfg, double a);
Check check_delay_residual(const config::RunConfig& cfg, double a);
Check check_mass_integral(const config::RunConfig& cfg, double a);
Check check_char_ratio(const config::RunConfig& cfg, double a);
Check check_g_mass(const config::RunConfig& cfg, const Pipeline& p);
Check check_g_support(const config::RunConfig& cfg, const Pipeline& p);
Check check_fg_marginal(const config::RunConfig& cfg, const Pipeline& p);
Check check_dirac_width(const config::RunConfig& cfg, const Pipeline& p);
Check check_gain_loss(const config::RunConfig& cfg, double a);
Check check_t_independence(const config::RunConfig& cfg, double a);
Check check_angular(const config::RunConfig& cfg);
Check check_negative_control(const config::RunConfig& cfg, const Pipeline& p);

/// the full battery at cfg.a (>= 12 checks), used by the verify command
VerificationReport run_verification(const config::RunConfig& cfg);

/// names accepted by --tol-<name>
std::vector<std::string> known_check_names();

}  // namespace checks
}  // namespace shear
