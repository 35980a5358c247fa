#pragma once

#include <cmath>

#include "shear/kernels.hpp"

namespace shear {
namespace scales {

/// Closed-form scale laws: lambda(tau) = C0/tau with
/// C0 = 1/(2a log(1/(1-a))), and eps(tau) = (a lambda((1-a)tau))^{1/a}.
struct ScaleModel {
    double a;
    double c0;

    explicit ScaleModel(const kernels::HomogeneitySetup& setup)
        : a(setup.a), c0(1.0 / (2.0 * setup.a * std::log(1.0 / (1.0 - setup.a)))) {}

    double lambda(double tau) const;
    double eps(double tau) const;
    double log_eps(double tau) const;  // log eps(tau), stable for large tau
};

double c0_of(const kernels::HomogeneitySetup& setup);

/// tau0 = tau - log(xi2/(xi2-xi1)); requires 0 <= xi1 < xi2.
double tau0_map(double tau, double xi1, double xi2);
/// collision-region approximation tau0 ~ (1-a) tau
double tau0_collision(double a, double tau);
/// bulk approximation tau0 ~ (1-a) tau + a log xi2
double tau0_bulk(double a, double tau, double xi2);

/// Launch time on the Dirac-thickness manifold
/// xi2-xi1 = y xi2^{1+a} e^{-a tau} / eps(tau0)^a, solved self-consistently.
double tau0_on_thickness(const ScaleModel& model, double tau, double xi2, double y = 1.0);
/// the same with xi2 passed as log(xi2) (the mass integrals span widths where
/// xi2 itself overflows)
double tau0_on_thickness_log(const ScaleModel& model, double tau, double log_xi2,
                             double y = 1.0);

/// Mass of the collapsed distribution over the dyadic scales
/// [eps(tau), eps(tau) e^tau]; exact closed form, -> 1 as tau -> inf.
double mass_integral(const ScaleModel& model, double tau);
/// the same integral by quadrature of its integrand (audit route)
double mass_integral_quad(const ScaleModel& model, double tau);

}  // namespace scales
}  // namespace shear
