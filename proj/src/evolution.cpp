#include "shear/evolution.hpp"

#include <cmath>
#include <limits>

namespace shear {
namespace evolution {

double detail_sigma_star_inf_log(const AsymptoticSolution& sol, double lx, double tau);
double detail_ramp_log(const AsymptoticSolution& sol, double lx, double tau);
double detail_marginal_weight_log(const AsymptoticSolution& sol, double lx, double tau);

namespace {
const double pi = 3.14159265358979323846;
const double sqrt2 = 1.4142135623730951;

// With lambda = C0/tau and C0 = 1/(2a log(1/(1-a))), the collapsed weight
// a lambda(tau0)/xi2 integrates over the dyadic scales to 1/a; the extra
// factor a normalizes the total mass to one.  Every G and F evaluator
// carries it.
double mass_factor(const AsymptoticSolution& sol) { return sol.setup.a; }

}  // namespace

std::pair<double, double> CharacteristicState::flow(double a, double tau) const {
    if (tau < tau0) throw std::domain_error("CharacteristicState::flow: tau < tau0");
    const double dt = tau - tau0;
    const double xi2 = xi2_0 * std::exp(-(1.0 / a - 1.0) * dt);
    const double xi1 = xi2_0 * std::exp(-dt / a) * std::expm1(dt);
    return {xi1, xi2};
}

double AsymptoticSolution::ramp(double xi2, double tau) const {
    const double edge = tau + model.log_eps(tau);  // log of eps(tau) e^tau
    const double d = std::log(xi2) - edge;
    if (sharp_cutoff) return d <= 0.0 ? 1.0 : 0.0;
    // tanh ramp whose central transition spans about half a decade
    return 0.5 * (1.0 - std::tanh(d / (0.25 * std::log(10.0))));
}

AsymptoticSolution assemble_solution(const kernels::HomogeneitySetup& setup,
                                     const cutoff::CutoffProfile& profile, bool sharp_cutoff) {
    profiles::ProfileCurve omega = profiles::build_omega_curve(setup, profile);
    profiles::ProfileCurve w = profiles::build_w_curve(setup, omega, profile);
    profiles::ProfileCurve hbar = profiles::build_hbar_curve(setup, w, profile);
    profiles::ProfileCurve u = profiles::build_u_curve(setup, hbar);
    return AsymptoticSolution{setup,
                              scales::ScaleModel(setup),
                              profile,
                              profile.sigma_function(),
                              std::move(omega),
                              std::move(w),
                              std::move(hbar),
                              std::move(u),
                              sharp_cutoff};
}

double damping_sigma_star(const AsymptoticSolution& sol, double xi2, double tau, double tau0) {
    if (!(tau >= tau0)) throw std::domain_error("damping_sigma_star: tau < tau0");
    const double a = sol.setup.a;
    const double c = 1.0 / a - 1.0;
    const double horizon = tau - tau0;
    if (horizon * (1.0 - a) > 50.0) return damping_sigma_star_inf(sol, xi2, tau);
    const double ly = std::log(xi2) - sol.model.log_eps(tau);
    auto f = [&](double u) {
        const double lg = ly + c * u;
        if (lg > 640.0) return 0.0;
        return kernels::lambda_of(sol.setup, sol.sigma_fn, std::exp(lg), 1e-9);
    };
    quad::QuadOptions opts;
    opts.rel_tol = 1e-9;
    const double I = quad::integrate_finite(f, 0.0, horizon, {}, opts).value;
    return std::exp(-I);
}

double damping_sigma_star_inf(const AsymptoticSolution& sol, double xi2, double tau) {
    return detail_sigma_star_inf_log(sol, std::log(xi2), tau);
}

double detail_sigma_star_inf_log(const AsymptoticSolution& sol, double lx, double tau) {
    const double p = sol.sigma.phi_at(lx - sol.model.log_eps(tau));
    return p < -745.0 ? 0.0 : std::exp(p);
}

double detail_ramp_log(const AsymptoticSolution& sol, double lx, double tau) {
    const double d = lx - (tau + sol.model.log_eps(tau));
    if (sol.sharp_cutoff) return d <= 0.0 ? 1.0 : 0.0;
    return 0.5 * (1.0 - std::tanh(d / (0.25 * std::log(10.0))));
}

// integrand of the xi2 mass integral in log xi2: (int G dxi1) * xi2
double detail_marginal_weight_log(const AsymptoticSolution& sol, double lx, double tau) {
    const double a = sol.setup.a;
    const double sig = detail_sigma_star_inf_log(sol, lx, tau);
    const double r = detail_ramp_log(sol, lx, tau);
    if (sig <= 0.0 || r <= 0.0) return 0.0;
    auto f = [&](double lyv) {
        const double y = std::exp(lyv);
        const double tau0 = scales::tau0_on_thickness_log(sol.model, tau, lx, y);
        if (tau0 > tau) return 0.0;
        return sol.model.lambda(tau0) * profiles::u_at(sol.setup, sol.hbar, y) * y;
    };
    quad::QuadOptions opts;
    opts.rel_tol = 1e-8;
    double total = quad::integrate_finite(f, std::log(sol.u.x_lo()), std::log(sol.u.x_hi()), {},
                                          opts)
                       .value;
    {
        const double le = std::log(sol.u.x_lo());
        const double lam =
            sol.model.lambda(scales::tau0_on_thickness_log(sol.model, tau, lx, sol.u.x_lo()));
        auto g = [&](double v) {
            const double lv = sol.u.left_tail().log_at(le - v) + (le - v);
            return lv < -700.0 ? 0.0 : std::exp(lv);
        };
        total += lam * quad::integrate_semi_infinite(
                           g, 0.0, quad::DecayModel::exponential(0.9), {}, opts)
                           .value;
    }
    {
        const double le = std::log(sol.u.x_hi());
        const double lam =
            sol.model.lambda(scales::tau0_on_thickness_log(sol.model, tau, lx, sol.u.x_hi()));
        auto g = [&](double v) {
            const double lv = sol.u.right_tail().log_at(le + v) + (le + v);
            return lv < -700.0 ? 0.0 : std::exp(lv);
        };
        total += lam * quad::integrate_semi_infinite(
                           g, 0.0,
                           quad::DecayModel::exponential(0.9 * (1.0 / a - 1.0)), {}, opts)
                           .value;
    }
    return mass_factor(sol) * total * sig * r;
}

double evaluate_G_bump(const AsymptoticSolution& sol, double xi2, double y, double tau) {
    if (!(xi2 > 0.0 && y > 0.0)) throw std::domain_error("evaluate_G_bump: needs xi2, y > 0");
    const double a = sol.setup.a;
    const double tau0 = scales::tau0_on_thickness(sol.model, tau, xi2, y);
    if (!(tau0 > 0.0)) throw std::domain_error("evaluate_G_bump: tau0 <= 0");
    if (tau0 > tau) return 0.0;  // the characteristic has not launched yet
    const double uval = profiles::u_at(sol.setup, sol.hbar, y);
    if (uval <= 0.0) return 0.0;
    const double sig = damping_sigma_star(sol, xi2, tau, tau0);
    const double r = sol.ramp(xi2, tau);
    if (sig <= 0.0 || r <= 0.0) return 0.0;
    const double lv = std::log(mass_factor(sol) * sol.model.lambda(tau0)) + a * tau +
                      a * sol.model.log_eps(tau0) - (2.0 + a) * std::log(xi2) + std::log(uval) +
                      std::log(sig) + std::log(r);
    if (lv > 700.0) return std::numeric_limits<double>::infinity();
    return lv < -745.0 ? 0.0 : std::exp(lv);
}

double evaluate_G(const AsymptoticSolution& sol, double xi1, double xi2, double tau) {
    const double a = sol.setup.a;
    const double tau0 = scales::tau0_map(tau, xi1, xi2);
    if (!(tau0 > 0.0)) throw std::domain_error("evaluate_G: characteristic launches before 0");
    const double ly = a * tau + a * sol.model.log_eps(tau0) + std::log(xi2 - xi1) -
                      (1.0 + a) * std::log(xi2);
    const double uval = profiles::u_at(sol.setup, sol.hbar, std::exp(ly));
    if (uval <= 0.0) return 0.0;
    const double sig = damping_sigma_star(sol, xi2, tau, tau0);
    const double r = sol.ramp(xi2, tau);
    if (sig <= 0.0 || r <= 0.0) return 0.0;
    const double lv = std::log(mass_factor(sol) * sol.model.lambda(tau0)) + a * tau +
                      a * sol.model.log_eps(tau0) - (2.0 + a) * std::log(xi2) + std::log(uval) +
                      std::log(sig) + std::log(r);
    if (lv > 700.0) return std::numeric_limits<double>::infinity();
    return lv < -745.0 ? 0.0 : std::exp(lv);
}

double evaluate_G_collapsed(const AsymptoticSolution& sol, double xi2, double tau) {
    if (!(xi2 > 0.0)) throw std::domain_error("evaluate_G_collapsed: xi2 must be positive");
    const double a = sol.setup.a;
    const double tau0 = scales::tau0_bulk(a, tau, xi2);
    if (!(tau0 > 0.0))
        throw std::domain_error("evaluate_G_collapsed: tau0 <= 0 for this xi2");
    const double sig = damping_sigma_star_inf(sol, xi2, tau);
    return mass_factor(sol) * sol.setup.a * sol.model.lambda(tau0) * sig *
           sol.ramp(xi2, tau) / xi2;
}

double g_marginal_xi1(const AsymptoticSolution& sol, double xi2, double tau) {
    return detail_marginal_weight_log(sol, std::log(xi2), tau) / xi2;
}

double g_mass(const AsymptoticSolution& sol, double tau) {
    const double le = sol.model.log_eps(tau);
    auto f = [&](double lx) { return detail_marginal_weight_log(sol, lx, tau); };
    quad::QuadOptions opts;
    opts.rel_tol = 1e-6;
    const double lo = le - std::log(10.0);
    const double hi = le + tau + std::log(10.0);
    return 2.0 * quad::integrate_finite(f, lo, hi, {}, opts).value;
}

double g_mass_outside_fraction(const AsymptoticSolution& sol, double tau) {
    const double le = sol.model.log_eps(tau);
    auto f = [&](double lx) { return detail_marginal_weight_log(sol, lx, tau); };
    quad::QuadOptions opts;
    opts.rel_tol = 1e-6;
    const double below =
        quad::integrate_finite(f, le - 3.0 * std::log(10.0), le, {}, opts).value;
    const double inside = quad::integrate_finite(f, le, le + tau, {}, opts).value;
    const double above = quad::integrate_finite(f, le + tau, le + tau + 3.0 * std::log(10.0),
                                                {}, opts)
                             .value;
    return (below + above) / (below + inside + above);
}

double evaluate_F_bump(const AsymptoticSolution& sol, double xi2, double xi3, double y,
                       double tau) {
    if (!(xi2 > 0.0 && y > 0.0)) throw std::domain_error("evaluate_F_bump: needs xi2, y > 0");
    const double a = sol.setup.a;
    const double tau0 = scales::tau0_on_thickness(sol.model, tau, xi2, y);
    if (!(tau0 > 0.0)) throw std::domain_error("evaluate_F_bump: tau0 <= 0");
    if (tau0 > tau) return 0.0;  // the characteristic has not launched yet
    const double lxt = std::log(std::hypot(xi2, xi3));
    const double ly = std::log(y);
    // W argument |xi_t| / (xi2 y^{1/a})
    const double wv = sol.w.at_log(lxt - std::log(xi2) - ly / a);
    if (wv <= 0.0) return 0.0;
    const double sig = damping_sigma_star(sol, xi2, tau, tau0);
    const double r = sol.ramp(xi2, tau);
    if (sig <= 0.0 || r <= 0.0) return 0.0;
    const double pref = std::log(4.0 * sqrt2 / std::pow(2.0, a) * a / (1.0 - a) *
                                 mass_factor(sol) * sol.model.lambda(tau0));
    const double lv = pref + a * tau + a * sol.model.log_eps(tau0) -
                      (2.0 + a) * std::log(xi2) - lxt - (1.0 + a) / a * ly + std::log(wv) +
                      std::log(sig) + std::log(r);
    if (lv > 700.0) return std::numeric_limits<double>::infinity();
    return lv < -745.0 ? 0.0 : std::exp(lv);
}

double evaluate_F(const AsymptoticSolution& sol, double xi1, double xi2, double xi3,
                  double tau) {
    const double a = sol.setup.a;
    const double tau0 = scales::tau0_map(tau, xi1, xi2);
    if (!(tau0 > 0.0)) throw std::domain_error("evaluate_F: characteristic launches before 0");
    const double ly = a * tau + a * sol.model.log_eps(tau0) + std::log(xi2 - xi1) -
                      (1.0 + a) * std::log(xi2);
    return evaluate_F_bump(sol, xi2, xi3, std::exp(ly), tau);
}

double evaluate_F_collapsed(const AsymptoticSolution& sol, double xi2, double xi3, double tau) {
    if (!(xi2 > 0.0)) throw std::domain_error("evaluate_F_collapsed: xi2 must be positive");
    const double a = sol.setup.a;
    const double tau0 = scales::tau0_bulk(a, tau, xi2);
    if (!(tau0 > 0.0)) throw std::domain_error("evaluate_F_collapsed: tau0 <= 0");
    const double sig = damping_sigma_star_inf(sol, xi2, tau);
    const double r = sol.ramp(xi2, tau);
    if (sig <= 0.0 || r <= 0.0) return 0.0;
    const double lv = std::log(mass_factor(sol) * a * sol.model.lambda(tau0) * sig * r / pi) -
                      2.0 * std::log(std::hypot(xi2, xi3));
    return lv < -745.0 ? 0.0 : std::exp(lv);
}

MarginalCheck marginal_check(const AsymptoticSolution& sol, double xi2, double tau, double y) {
    MarginalCheck out{};
    quad::QuadOptions opts;
    opts.rel_tol = 1e-8;
    // int F dxi3 with xi3 = xi2 sinh(t)-style log sampling: even in xi3
    auto f = [&](double lt) {
        const double t = std::exp(lt);
        return evaluate_F_bump(sol, xi2, xi2 * t, y, tau) * xi2 * t;
    };
    double total = quad::integrate_finite(f, -30.0, 30.0, {}, opts).value;
    out.f_marginal_numeric =
        2.0 * total + 2.0 * evaluate_F_bump(sol, xi2, xi2 * std::exp(-30.0), y, tau) * xi2 *
                          std::exp(-30.0);  // strip below t = e^-30, integrand flat
    out.g_analytic = evaluate_G_bump(sol, xi2, y, tau);

    auto fc = [&](double lt) {
        const double t = std::exp(lt);
        return evaluate_F_collapsed(sol, xi2, xi2 * t, tau) * xi2 * t;
    };
    out.f_collapsed_numeric = 2.0 * quad::integrate_finite(fc, -30.0, 30.0, {}, opts).value +
                              2.0 * evaluate_F_collapsed(sol, xi2, xi2 * std::exp(-30.0), tau) *
                                  xi2 * std::exp(-30.0);
    out.g_collapsed = evaluate_G_collapsed(sol, xi2, tau);
    return out;
}

double log_bump_width(const AsymptoticSolution& sol, double xi2, double tau) {
    const double a = sol.setup.a;
    // interquartile range of the U mass in y
    quad::QuadOptions opts;
    opts.rel_tol = 1e-9;
    auto m = [&](double lo, double hi) {
        auto f = [&](double ly) {
            return profiles::u_at(sol.setup, sol.hbar, std::exp(ly)) * std::exp(ly);
        };
        return quad::integrate_finite(f, lo, hi, {}, opts).value;
    };
    const double llo = std::log(sol.u.x_lo()), lhi = std::log(sol.u.x_hi());
    const double total = m(llo, lhi);
    auto quantile = [&](double q) {
        double lo = llo, hi = lhi;
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (m(llo, mid) < q * total)
                lo = mid;
            else
                hi = mid;
        }
        return std::exp(0.5 * (lo + hi));
    };
    const double y25 = quantile(0.25);
    const double y75 = quantile(0.75);
    const double tau0 = scales::tau0_on_thickness(sol.model, tau, xi2, 1.0);
    return std::log(y75 - y25) + (1.0 + a) * std::log(xi2) - a * tau -
           a * sol.model.log_eps(tau0);
}

}  // namespace evolution
}  // namespace shear
