#pragma once

#include <memory>
#include <vector>

#include "shear/interp.hpp"
#include "shear/kernels.hpp"

namespace shear {
namespace cutoff {

/// The solved cutoff profile, stored as phi = log sigma on a uniform grid in
/// xi = log y, with a power-law left tail and a -c e^{-a xi} right tail.
class CutoffProfile {
public:
    CutoffProfile() = default;
    CutoffProfile(std::vector<double> xi, std::vector<double> phi, double a, double epsilon);

    double a() const { return a_; }
    double epsilon() const { return epsilon_; }
    const std::vector<double>& xi_grid() const { return xi_; }
    const std::vector<double>& phi() const { return phi_; }

    double beta_hat = 0.0;
    double residual_sup = 0.0;
    double k_bar = 0.0;  // sup |phi| over xi >= 0

    double left_tail_slope() const { return left_slope_; }
    double right_tail_coef() const { return right_coef_; }

    /// phi extended by the tail models
    double phi_at(double xi) const;
    /// sigma(y) = e^{phi(log y)}, y > 0
    double sigma_at(double y) const;
    kernels::SigmaFunction sigma_function() const;

    /// y at which sigma crosses the given level (interpolated); level in (0,1)
    double scale_at_level(double level) const;
    /// y where sigma = 1/2
    double characteristic_scale() const { return scale_at_level(0.5); }

    /// Throws std::runtime_error naming the violated invariant, if any.
    void validate() const;

private:
    std::vector<double> xi_, phi_;
    double a_ = 0.5, epsilon_ = 0.0;
    double left_slope_ = 0.0, right_coef_ = 0.0;
    std::shared_ptr<Pchip> interp_;
};

/// Discretization of the regularized fixed-point operator
///   T_eps[phi](xi) = -(8 pi a/(1-a)) int e^{phi(z)} (1+eps e^{-z})^{-1}
///                     e^{-a z} Q(e^{xi-z}) dz
/// by exact product integration of the interpolated integrand against the
/// kernel on a refined grid, plus analytic remainders beyond the extensions.
class TOperator {
public:
    TOperator(const kernels::HomogeneitySetup& setup, const kernels::KernelTable& table,
              std::vector<double> xi_grid, int refine = 4, double extension = 10.0,
              double prefactor_scale = 1.0, int threads = 1);

    std::vector<double> apply(const std::vector<double>& phi, double eps) const;

    const std::vector<double>& xi_grid() const { return xi_; }
    double prefactor() const { return kappa_; }

private:
    double h_model(double z, const Pchip& interp, double s_left, double c_right,
                   double eps) const;

    double a_;
    double kappa_;  // (8 pi a/(1-a)) * prefactor_scale
    std::vector<double> xi_;
    double dx_ = 0, dr_ = 0;
    int refine_ = 4;
    long n_ = 0, m_ = 0, left_pad_ = 0;
    double z0_ = 0, z_last_ = 0;
    double c0_ = 0;  // kernel left-asymptote constant
    std::vector<double> weights_;  // AccW indexed by q - q_min
    long q_min_ = 0;
    int threads_ = 1;
};

/// Convenience wrapper constructing a TOperator for the profile's grid.
std::vector<double> apply_T(const kernels::HomogeneitySetup& setup,
                            const kernels::KernelTable& table, const CutoffProfile& profile,
                            double eps);

struct SolveOptions {
    double damping = 0.5;
    double tol = 1e-10;
    int max_iter = 4000;
    bool use_anderson = false;
    int anderson_depth = 5;
};

class SolveFailure : public std::runtime_error {
public:
    SolveFailure(const std::string& what, double residual)
        : std::runtime_error(what), last_residual(residual) {}
    double last_residual;
};

/// Damped fixed-point iteration at fixed eps, warm-started from init.
CutoffProfile solve_regularized(const kernels::HomogeneitySetup& setup, const TOperator& op,
                                double eps, const std::vector<double>& init_phi,
                                const SolveOptions& opts = {});

struct ContinuationResult {
    CutoffProfile profile;
    std::vector<double> eps_steps;
    std::vector<double> step_distances;  // sup|phi_k - phi_{k-1}|
};

/// Solves along a decreasing eps schedule, warm-starting each stage, and
/// checks the Cauchy trend of successive solutions.
ContinuationResult continue_to_zero(const kernels::HomogeneitySetup& setup, const TOperator& op,
                                    const std::vector<double>& schedule,
                                    const SolveOptions& opts = {});

std::vector<double> default_eps_schedule(double eps_final = 1e-13);
std::vector<double> default_xi_grid(double lo = -40.0, double hi = 40.0, int n = 2048);

struct BetaEstimate {
    double beta_integral = 0.0;
    double beta_slope = 0.0;
    bool marginal = false;  // left tail exponent <= a: integral reported as marginal
};

/// Two routes to the small-argument exponent: the prefactored integral
/// (16 pi a/(1-a)) int sigma(z) z^{-(1+a)} dz and the log-log regression slope
/// over the leftmost decade of the grid where sigma < 1e-3.
BetaEstimate estimate_beta(const kernels::HomogeneitySetup& setup, const CutoffProfile& profile);

/// Computes (a/(1-a)) * 8 pi int_0^inf dy int_R dz |y-z|^{-a} s(y)s(|z|)/(y|z|);
/// equals 1 for a solution of the cutoff problem.  `scale` multiplies sigma
/// (negative-control hook).
double check_identity_prop74(const kernels::HomogeneitySetup& setup,
                             const CutoffProfile& profile, double sigma_scale = 1.0);

}  // namespace cutoff
}  // namespace shear
