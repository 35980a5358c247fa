#pragma once

#include <functional>

#include "shear/kernels.hpp"

namespace shear {
namespace conservation {

/// Factorized test density G(xi1, xi2) = g1(xi1) g2(xi2) with Gaussian-class
/// decay; g1's bulk must lie within [center - halfwidth, center + halfwidth].
struct TestDensity {
    std::function<double(double)> g1;
    std::function<double(double)> g2;
    double g1_center = 0.0;
    double g1_halfwidth = 12.0;
    double g2_integral = 1.0;
};

/// unit Gaussians, optionally translated in the first variable
TestDensity gaussian_density(double mean1 = 0.0, double sd1 = 1.0);

/// Mass of the reduced gain term,
///   (16 sqrt2/(2^a t)) (int g2)^2 int dx1 int_0^inf dz g1(x1+z) g1(x1-z)
///   z^{-(a+1)} int_0^{tz} Phi(xi2/(tz)) dxi2,
/// with the inner integral taken as sqrt2 pi t z when use_phi_identity is
/// set, or by quadrature for audit.
double reduced_gain_mass(const kernels::HomogeneitySetup& setup, const TestDensity& test,
                         double t, bool use_phi_identity = true);

/// Mass of the reduced loss term,
///   8 pi (int g2)^2 int int |alpha-beta|^{-a} g1(alpha) g1(beta).
double reduced_loss_mass(const kernels::HomogeneitySetup& setup, const TestDensity& test);

/// int_0^{pi/2} (sin(psi/2) + cos(psi/2)) dpsi, numerically (= 2).
double f_gain_angular_identity();
/// the same with an arbitrary upper limit, plus its antiderivative
double f_gain_angular_partial(double upper);
double f_gain_angular_closed_form(double upper);

}  // namespace conservation
}  // namespace shear
