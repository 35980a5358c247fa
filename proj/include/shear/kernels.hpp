#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "shear/interp.hpp"
#include "shear/quadrature.hpp"

namespace shear {
namespace kernels {

/// The collision-kernel homogeneity a = |gamma|, gamma in (-1,0).
struct HomogeneitySetup {
    double a;
    explicit HomogeneitySetup(double a_) : a(a_) {
        if (!(a > 0.0 && a < 1.0))
            throw std::domain_error("HomogeneitySetup: a must lie in (0,1)");
    }
};

/// Q(s) = int_s^inf (|z-1|^{-a} + (z+1)^{-a}) dz/z, evaluated directly by
/// singularity-aware quadrature.
double q_kernel(const HomogeneitySetup& setup, double s);

/// lim_{s->0} (Q(s) + 2 log s); the constant of the left asymptote.
double q_left_constant(const HomogeneitySetup& setup);

/// Sampled Q in log variables v = log s, with analytic tails outside the grid
/// and direct evaluation inside a small cusp window around v = 0 (where the
/// interpolant cannot represent the |v|^{1-a} kink to full accuracy).
class KernelTable {
public:
    KernelTable(const HomogeneitySetup& setup, double v_lo, double v_hi, int n);

    /// Q(e^v) for any real v
    double q_log(double v) const;
    /// Q(s), s > 0
    double q(double s) const;

    double a() const { return a_; }
    const std::vector<double>& v_grid() const { return v_; }
    const std::vector<double>& values() const { return qv_; }
    /// left asymptote Q ~ c0 + c1 v (c1 = -2)
    double left_c0() const { return left_c0_; }
    double left_c1() const { return left_c1_; }
    /// right asymptote Q ~ right_coef * e^{-a v}
    double right_coef() const { return right_coef_; }
    double cusp_halfwidth() const { return cusp_halfwidth_; }

private:
    double a_;
    std::vector<double> v_, qv_;
    Pchip interp_;
    double left_c0_ = 0, left_c1_ = -2.0, right_coef_ = 0;
    double cusp_halfwidth_ = 0.5;
    double q_at_one_ = 0;  // Q(1), anchor for the cusp-window evaluation
};

KernelTable build_kernel_table(const HomogeneitySetup& setup, double v_lo, double v_hi, int n);

/// Phi(s) = int_s^1 [sqrt(1-sqrt(1-rho^2)) + sqrt(1+sqrt(1-rho^2))]
///          / (sqrt(1-rho^2) sqrt(rho^2-s^2)) drho,  0 < s < 1.
double phi_kernel(double s, double rel_tol = 1e-10);

/// int_0^1 Phi(s) ds (= sqrt(2) pi analytically)
double phi_integral(double rel_tol = 1e-9);

/// A positive even profile on (0,inf), evaluated through `value`, with its
/// small-argument power-law exponent declared for quadrature near the origin
/// and optional landmarks bracketing where the profile has structure (pure
/// power below the bottom, constant above the top).
struct SigmaFunction {
    std::function<double(double)> value;
    double origin_exponent = 1.0;
    double structure_bottom = 0.0;
    double structure_top = std::numeric_limits<double>::infinity();
};

/// Lambda[sigma](y) = 8 pi int_R |y-zeta|^{-a} sigma(|zeta|)/|zeta| dzeta,
/// folded onto (0,inf) by evenness.  y may be 0 when origin_exponent > a.
double lambda_of(const HomogeneitySetup& setup, const SigmaFunction& sigma, double y,
                 double rel_tol = 1e-10);

}  // namespace kernels
}  // namespace shear
