#include "shear/scales.hpp"

#include <cmath>

#include "shear/quadrature.hpp"

namespace shear {
namespace scales {

double ScaleModel::lambda(double tau) const {
    if (!(tau > 0.0)) throw std::domain_error("ScaleModel::lambda: tau must be positive");
    return c0 / tau;
}

double ScaleModel::log_eps(double tau) const {
    if (!(tau > 0.0)) throw std::domain_error("ScaleModel::eps: tau must be positive");
    return (std::log(a * c0) - std::log((1.0 - a) * tau)) / a;
}

double ScaleModel::eps(double tau) const { return std::exp(log_eps(tau)); }

double c0_of(const kernels::HomogeneitySetup& setup) { return ScaleModel(setup).c0; }

double tau0_map(double tau, double xi1, double xi2) {
    if (!(xi1 >= 0.0 && xi1 < xi2))
        throw std::domain_error("tau0_map: requires 0 <= xi1 < xi2");
    return tau - std::log(xi2 / (xi2 - xi1));
}

double tau0_collision(double a, double tau) { return (1.0 - a) * tau; }

double tau0_bulk(double a, double tau, double xi2) {
    return (1.0 - a) * tau + a * std::log(xi2);
}

double tau0_on_thickness(const ScaleModel& model, double tau, double xi2, double y) {
    return tau0_on_thickness_log(model, tau, std::log(xi2), y);
}

double tau0_on_thickness_log(const ScaleModel& model, double tau, double log_xi2, double y) {
    // tau0 = (1-a) tau + a log xi2 + log y - a log eps(tau0), iterated
    const double base = (1.0 - model.a) * tau + model.a * log_xi2 + std::log(y);
    double t0 = std::max(base, 1.0);
    for (int i = 0; i < 64; ++i) {
        const double next = base - model.a * model.log_eps(t0);
        if (std::fabs(next - t0) < 1e-13 * std::fabs(next)) return next;
        t0 = next;
    }
    return t0;
}

double mass_integral(const ScaleModel& model, double tau) {
    const double a = model.a;
    const double le = model.log_eps(tau);
    if (!(le < le + tau)) throw std::domain_error("mass_integral: empty support");
    // 2 a^2 int_{eps}^{eps e^tau} lambda((1-a) tau + a log xi2) dxi2/xi2
    return 2.0 * a * model.c0 *
           std::log((tau + a * le) / ((1.0 - a) * tau + a * le));
}

double mass_integral_quad(const ScaleModel& model, double tau) {
    const double a = model.a;
    const double le = model.log_eps(tau);
    auto f = [&](double th) { return model.lambda((1.0 - a) * tau + a * th); };
    quad::QuadOptions opts;
    opts.rel_tol = 1e-12;
    return 2.0 * a * a * quad::integrate_finite(f, le, le + tau, {}, opts).value;
}

}  // namespace scales
}  // namespace shear
