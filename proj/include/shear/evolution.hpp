#pragma once

#include <utility>

#include "shear/cutoff.hpp"
#include "shear/profiles.hpp"
#include "shear/scales.hpp"

namespace shear {
namespace evolution {

/// Characteristic curve launched from {xi1 = 0, xi2 = xi2_0} at time tau0.
struct CharacteristicState {
    double tau0;
    double xi2_0;

    /// (xi1, xi2) at time tau >= tau0
    std::pair<double, double> flow(double a, double tau) const;
};

/// The assembled matched-asymptotic solution: scale model, cutoff profile
/// and the derived curves needed by the G and F evaluators.
struct AsymptoticSolution {
    kernels::HomogeneitySetup setup;
    scales::ScaleModel model;
    cutoff::CutoffProfile sigma;
    kernels::SigmaFunction sigma_fn;
    profiles::ProfileCurve omega;
    profiles::ProfileCurve w;
    profiles::ProfileCurve hbar;
    profiles::ProfileCurve u;
    bool sharp_cutoff = false;  // support indicator: sharp or tanh ramp

    double ramp(double xi2, double tau) const;
};

AsymptoticSolution assemble_solution(const kernels::HomogeneitySetup& setup,
                                     const cutoff::CutoffProfile& profile,
                                     bool sharp_cutoff = false);

/// exp(-int_0^{tau-tau0} Lambda(xi2 e^{(1/a-1)u}/eps(tau)) du); the
/// infinite-horizon form collapses to sigma(xi2/eps(tau)).
double damping_sigma_star(const AsymptoticSolution& sol, double xi2, double tau, double tau0);
double damping_sigma_star_inf(const AsymptoticSolution& sol, double xi2, double tau);

/// Full G along the bump parametrization y = e^{a tau} eps(tau0)^a
/// (xi2-xi1)/xi2^{1+a}; log-safe for large tau.
double evaluate_G_bump(const AsymptoticSolution& sol, double xi2, double y, double tau);
double evaluate_G(const AsymptoticSolution& sol, double xi1, double xi2, double tau);
/// the delta(xi2-xi1) weight of the collapsed form
double evaluate_G_collapsed(const AsymptoticSolution& sol, double xi2, double tau);

/// int G dxi1 at fixed xi2 through the bump parametrization
double g_marginal_xi1(const AsymptoticSolution& sol, double xi2, double tau);
/// total mass 2 int int G dxi1 dxi2 over xi2 in [eps/10, 10 eps e^tau]
double g_mass(const AsymptoticSolution& sol, double tau);
/// mass fraction outside [eps(tau), eps(tau) e^tau]
double g_mass_outside_fraction(const AsymptoticSolution& sol, double tau);

double evaluate_F_bump(const AsymptoticSolution& sol, double xi2, double xi3, double y,
                       double tau);
double evaluate_F(const AsymptoticSolution& sol, double xi1, double xi2, double xi3, double tau);
double evaluate_F_collapsed(const AsymptoticSolution& sol, double xi2, double xi3, double tau);

struct MarginalCheck {
    double f_marginal_numeric;   // int F dxi3 through the full W form
    double g_analytic;           // matching G value
    double f_collapsed_numeric;  // int of the collapsed Lorentzian form
    double g_collapsed;          // collapsed G weight
};
/// consistency of int F dxi3 with G, at the bump position y
MarginalCheck marginal_check(const AsymptoticSolution& sol, double xi2, double tau,
                             double y = 1.0);

/// interquartile width of the xi1-bump at fixed xi2, in log form:
/// log(width) = log(y75-y25) + (1+a) log xi2 - a tau - a log eps(tau0)
double log_bump_width(const AsymptoticSolution& sol, double xi2, double tau);

}  // namespace evolution
}  // namespace shear
