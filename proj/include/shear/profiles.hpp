#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "shear/cutoff.hpp"
#include "shear/interp.hpp"
#include "shear/kernels.hpp"

namespace shear {
namespace profiles {

enum class CurveKind { Omega, W, Wtilde, Hbar, U };

std::string curve_kind_name(CurveKind kind);

/// Power-log tail attached at a grid edge:
///   v(x) = (x/x_edge)^power * (amp + logcoef * log(x/x_edge)),
/// clamped at zero where the log factor would cross it.
struct TailModel {
    double power = 0.0;
    double amp = 0.0;
    double logcoef = 0.0;
    double x_edge = 1.0;

    double at_log(double lx) const;
    /// log of the tail value, -inf where it clamps to zero
    double log_at(double lx) const;
};

/// A sampled positive curve on a log-spaced grid with interpolation inside
/// and analytic tail models outside.
class ProfileCurve {
public:
    ProfileCurve() = default;
    ProfileCurve(CurveKind kind, std::vector<double> abscissae, std::vector<double> values,
                 TailModel left, TailModel right);

    double at(double x) const { return at_log(std::log(x)); }
    double at_log(double lx) const;

    CurveKind kind() const { return kind_; }
    const std::vector<double>& abscissae() const { return x_; }
    const std::vector<double>& values() const { return v_; }
    const TailModel& left_tail() const { return left_; }
    const TailModel& right_tail() const { return right_; }
    double x_lo() const { return x_.front(); }
    double x_hi() const { return x_.back(); }

    void validate() const;

private:
    CurveKind kind_ = CurveKind::Omega;
    std::vector<double> x_, v_, lx_;
    Pchip interp_;  // log x -> log v
    TailModel left_, right_;
};

/// Omega(zeta) = int_R sigma(|eta+zeta|) sigma(|eta-zeta|) /
///               (|eta+zeta| |eta-zeta|) deta, zeta > 0.
double omega_at(const kernels::HomogeneitySetup& setup, const kernels::SigmaFunction& sigma,
                double zeta, double rel_tol = 1e-9);
ProfileCurve build_omega_curve(const kernels::HomogeneitySetup& setup,
                               const cutoff::CutoffProfile& profile,
                               int points_per_decade = 15);

/// W(r) = int_r^inf zeta^{-(a+1)} [sqrt(1+sqrt(1-(r/z)^2)) + sqrt(1-sqrt(..))]
///        / sqrt(1-(r/z)^2) Omega(z) dz, via the z = r/sin(theta) form.
double w_at(const kernels::HomogeneitySetup& setup, const ProfileCurve& omega, double r,
            double rel_tol = 1e-9);
ProfileCurve build_w_curve(const kernels::HomogeneitySetup& setup, const ProfileCurve& omega,
                           const cutoff::CutoffProfile& profile, int points_per_decade = 15);

/// Wtilde(s) = (4 sqrt2 / 2^a) W(s^{-1/a}) s^{-(1/a+1)}
double w_tilde_at(const kernels::HomogeneitySetup& setup, const ProfileCurve& w, double s);

/// int_0^inf W(r) dr including the analytic tail pieces
double w_integral(const kernels::HomogeneitySetup& setup, const ProfileCurve& w);
/// W0 = int_0^inf Wtilde(s) ds by direct quadrature in s
double w0_from_wtilde(const kernels::HomogeneitySetup& setup, const ProfileCurve& w);

/// two routes to Hbar(zeta); both carry the (8 sqrt2/2^a)(a/(1-a)) prefactor
double hbar_from_omega(const kernels::HomogeneitySetup& setup, const ProfileCurve& omega,
                       double zeta, double rel_tol = 1e-8);
double hbar_from_w(const kernels::HomogeneitySetup& setup, const ProfileCurve& w, double zeta,
                   double rel_tol = 1e-9);
ProfileCurve build_hbar_curve(const kernels::HomogeneitySetup& setup, const ProfileCurve& w,
                              const cutoff::CutoffProfile& profile, int points_per_decade = 15);

/// int_0^inf zeta Hbar(zeta) dzeta (= 1 for the solved profile chain)
double zeta_hbar_moment(const kernels::HomogeneitySetup& setup, const ProfileCurve& hbar);

/// U(zeta) = zeta^{-(2+a)/a} Hbar(zeta^{-1/a})
double u_at(const kernels::HomogeneitySetup& setup, const ProfileCurve& hbar, double zeta);
ProfileCurve build_u_curve(const kernels::HomogeneitySetup& setup, const ProfileCurve& hbar,
                           int n = 200);
/// int_0^inf U dzeta (= a for the solved chain)
double u_integral(const kernels::HomogeneitySetup& setup, const ProfileCurve& u);

/// Phi with the s -> 1 limit filled in; safe inside quadratures.
double phi_kernel_safe(double s, double rel_tol = 1e-10);

}  // namespace profiles
}  // namespace shear
