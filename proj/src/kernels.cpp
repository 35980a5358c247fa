#include "shear/kernels.hpp"

#include <cmath>
#include <limits>

namespace shear {
namespace kernels {

namespace {

using quad::DecayModel;
using quad::Integrand;
using quad::QuadOptions;
using quad::SingularitySpec;

const double pi = 3.14159265358979323846;

// integrand of Q in v = log z: f(e^v) = |e^v-1|^{-a} + (e^v+1)^{-a},
// arranged to avoid overflow for large v; expm1 keeps |e^v-1| exact near the
// v=0 singularity (its location is 0, so v itself is the exact offset).
double q_integrand_log(double v, double /*delta*/, double a) {
    if (v > 0.0) {
        // f = e^{-a v} (|1-e^{-v}|^{-a} + (1+e^{-v})^{-a})
        const double ev = std::exp(-v);
        const double one_m = -std::expm1(-v);
        return std::exp(-a * v) * (std::pow(one_m, -a) + std::pow(1.0 + ev, -a));
    }
    return std::pow(std::fabs(std::expm1(v)), -a) + std::pow(std::exp(v) + 1.0, -a);
}

const double kNoDelta = std::numeric_limits<double>::infinity();

}  // namespace

double q_kernel(const HomogeneitySetup& setup, double s) {
    if (!(s > 0.0)) throw std::domain_error("q_kernel: s must be positive");
    const double a = setup.a;
    const double v0 = std::log(s);
    QuadOptions opts;
    opts.rel_tol = 1e-12;

    Integrand f = [a](double v, double delta) { return q_integrand_log(v, delta, a); };

    double total = 0.0;
    const double v_split = std::max(v0, 1.0);
    if (v0 < 1.0) {
        std::vector<SingularitySpec> sings;
        if (v0 < 0.0)
            sings.push_back(SingularitySpec::at_interior(0.0, a));
        else if (v0 == 0.0)
            sings.push_back(SingularitySpec::at_left_endpoint(0.0, a));
        total += quad::integrate_finite(f, v0, 1.0, sings, opts).value;
    }
    total += quad::integrate_semi_infinite(f, v_split, DecayModel::exponential(a), {}, opts).value;
    return total;
}

double q_left_constant(const HomogeneitySetup& setup) {
    const double a = setup.a;
    QuadOptions opts;
    opts.rel_tol = 1e-12;
    // C = int_0^1 (f(z)-2) dz/z + int_1^inf f(z) dz/z, in v-variables
    Integrand g = [a](double v, double delta) {
        return q_integrand_log(v, delta, a) - 2.0;
    };
    double c = quad::integrate_finite(g, -40.0, 0.0,
                                      {SingularitySpec::at_right_endpoint(0.0, a)}, opts)
                   .value;
    Integrand f = [a](double v, double delta) { return q_integrand_log(v, delta, a); };
    c += quad::integrate_finite(f, 0.0, 1.0, {SingularitySpec::at_left_endpoint(0.0, a)}, opts)
             .value;
    c += quad::integrate_semi_infinite(f, 1.0, DecayModel::exponential(a), {}, opts).value;
    // remainder of (f-2)/1 below v=-40 is O(e^{-40}); negligible
    return c;
}

namespace {

// cumulative sampling of Q on a given v-grid, descending from the top node:
// Q(e^{v_i}) = Q(e^{v_{i+1}}) + int_{v_i}^{v_{i+1}} f(e^v) dv
std::vector<double> sample_q_cumulative(double a, const std::vector<double>& v) {
    QuadOptions opts;
    opts.rel_tol = 1e-13;
    Integrand f = [a](double vv, double delta) { return q_integrand_log(vv, delta, a); };
    const size_t n = v.size();
    std::vector<double> q(n);
    q[n - 1] =
        quad::integrate_semi_infinite(f, v.back(), DecayModel::exponential(a), {}, opts).value;
    for (size_t k = n - 1; k-- > 0;) {
        const double lo = v[k], hi = v[k + 1];
        double step;
        if (lo < 0.0 && hi > 0.0) {
            step = quad::integrate_finite(f, lo, hi, {SingularitySpec::at_interior(0.0, a)}, opts)
                       .value;
        } else if (lo == 0.0 || hi == 0.0) {
            std::vector<SingularitySpec> s;
            if (lo == 0.0) s.push_back(SingularitySpec::at_left_endpoint(0.0, a));
            if (hi == 0.0) s.push_back(SingularitySpec::at_right_endpoint(0.0, a));
            step = quad::integrate_finite(f, lo, hi, s, opts).value;
        } else {
            double err;
            step = quad::gk15_panel([&](double vv) { return q_integrand_log(vv, kNoDelta, a); },
                                    lo, hi, err);
            if (err > 1e-13 * std::fabs(step) + 1e-16)
                step = quad::integrate_finite(f, lo, hi, {}, opts).value;
        }
        q[k] = q[k + 1] + step;
        if (!(q[k] > q[k + 1]))
            throw std::runtime_error("KernelTable: computed values not strictly decreasing");
    }
    return q;
}

std::vector<double> uniform_grid(double lo, double hi, size_t n) {
    std::vector<double> v(n);
    const double d = (hi - lo) / static_cast<double>(n - 1);
    for (size_t i = 0; i < n; ++i) v[i] = lo + d * static_cast<double>(i);
    v.back() = hi;
    return v;
}

}  // namespace

KernelTable::KernelTable(const HomogeneitySetup& setup, double v_lo, double v_hi, int n)
    : a_(setup.a) {
    if (!(v_lo < v_hi)) throw std::invalid_argument("KernelTable: v_lo < v_hi required");
    if (n < 64) throw std::invalid_argument("KernelTable: n >= 64 required");
    cusp_halfwidth_ = 0.5;

    // refine until pchip midpoints match the directly sampled doubled grid to
    // 1e-8 relative (outside the cusp window, which is evaluated directly)
    size_t m = static_cast<size_t>(n);
    for (int pass = 0;; ++pass) {
        v_ = uniform_grid(v_lo, v_hi, m);
        qv_ = sample_q_cumulative(a_, v_);
        std::vector<double> v2 = uniform_grid(v_lo, v_hi, 2 * m - 1);
        std::vector<double> q2 = sample_q_cumulative(a_, v2);
        Pchip trial(v_, qv_);
        double worst = 0.0;
        for (size_t i = 0; i + 1 < v_.size(); ++i) {
            const double vm = v2[2 * i + 1];
            if (std::fabs(vm) <= cusp_halfwidth_) continue;
            worst = std::max(worst, std::fabs(trial(vm) - q2[2 * i + 1]) / q2[2 * i + 1]);
        }
        if (worst <= 1e-8) {
            interp_ = std::move(trial);
            break;
        }
        if (pass >= 6)
            throw std::runtime_error("KernelTable: interpolation accuracy not reached");
        m = 2 * m - 1;
    }

    left_c1_ = -2.0;
    left_c0_ = qv_.front() + 2.0 * v_.front();
    right_coef_ = qv_.back() * std::exp(a_ * v_.back());
    q_at_one_ = q_kernel(setup, 1.0);
}

double KernelTable::q_log(double v) const {
    if (v < v_.front()) return left_c0_ + left_c1_ * v;
    if (v > v_.back()) return right_coef_ * std::exp(-a_ * v);
    if (std::fabs(v) <= cusp_halfwidth_) {
        // direct local evaluation across the |v|^{1-a} cusp
        const double a = a_;
        Integrand f = [a](double vv, double delta) { return q_integrand_log(vv, delta, a); };
        QuadOptions opts;
        opts.rel_tol = 1e-12;
        if (v == 0.0) return q_at_one_;
        if (v < 0.0) {
            double inc = quad::integrate_finite(
                             f, v, 0.0, {SingularitySpec::at_right_endpoint(0.0, a_)}, opts)
                             .value;
            return q_at_one_ + inc;
        }
        double dec =
            quad::integrate_finite(f, 0.0, v, {SingularitySpec::at_left_endpoint(0.0, a_)}, opts)
                .value;
        return q_at_one_ - dec;
    }
    return interp_(v);
}

double KernelTable::q(double s) const {
    if (!(s > 0.0)) throw std::domain_error("KernelTable::q: s must be positive");
    return q_log(std::log(s));
}

KernelTable build_kernel_table(const HomogeneitySetup& setup, double v_lo, double v_hi, int n) {
    return KernelTable(setup, v_lo, v_hi, n);
}

double phi_kernel(double s, double rel_tol) {
    if (!(s > 0.0 && s < 1.0)) throw std::domain_error("phi_kernel: s must lie in (0,1)");
    // rho = sin(phi) removes the rho=1 endpoint; the remaining inverse square
    // root at phi0 = asin(s) is declared to the engine.  sin(phi)-s is formed
    // from the exact offset, sin(phi/2)+cos(phi/2) is the half-angle form of
    // the nested square roots.
    const double phi0 = std::asin(s);
    const double half_pi = 0.5 * pi;
    if (!(phi0 < half_pi)) throw std::domain_error("phi_kernel: s too close to 1");
    quad::Integrand f = [s, phi0](double phi, double delta) {
        double sm;  // sin(phi) - s
        if (std::isfinite(delta))
            sm = 2.0 * std::cos(phi0 + 0.5 * delta) * std::sin(0.5 * delta);
        else
            sm = std::sin(phi) - s;
        const double w = sm * (std::sin(phi) + s);
        const double num = std::sin(0.5 * phi) + std::cos(0.5 * phi);
        return 1.4142135623730951 * num / std::sqrt(w);
    };
    quad::QuadOptions opts;
    opts.rel_tol = rel_tol;
    return quad::integrate_finite(f, phi0, half_pi,
                                  {SingularitySpec::at_left_endpoint(phi0, 0.5)}, opts)
        .value;
}

double phi_integral(double rel_tol) {
    // int_0^1 Phi(s) ds via s = e^{-t}; the integrand decays like t e^{-t}
    quad::QuadOptions opts;
    opts.rel_tol = rel_tol;
    auto f = [](double t) {
        const double s = std::exp(-t);
        if (s >= 1.0 - 5e-12) return pi * s;  // Phi -> pi at the s=1 endpoint
        return phi_kernel(s, 1e-11) * s;
    };
    return quad::integrate_semi_infinite(f, 0.0, DecayModel::exponential(1.0), {}, opts).value;
}

double lambda_of(const HomogeneitySetup& setup, const SigmaFunction& sigma, double y,
                 double rel_tol) {
    const double a = setup.a;
    const double beta = sigma.origin_exponent;
    if (!std::isfinite(y)) throw std::domain_error("lambda_of: y must be finite");
    y = std::fabs(y);
    QuadOptions opts;
    opts.rel_tol = rel_tol;

    // a head panel [0,A] keeps the origin substitution inside the pure-power
    // region; structured decades are integrated in log space so their mass
    // cannot hide against a panel edge
    const double s_bot = sigma.structure_bottom > 0.0 ? 0.1 * sigma.structure_bottom
                                                      : std::numeric_limits<double>::infinity();
    const double s_top =
        std::isfinite(sigma.structure_top) ? 10.0 * sigma.structure_top : -1.0;

    if (y == 0.0) {
        if (!(beta > a))
            throw std::domain_error("lambda_of: integral divergent at origin (beta <= a)");
        // 16 pi int_0^inf sigma(z) z^{-(1+a)} dz; sigma(d)/d is formed first
        // so the near-origin evaluation cannot overflow
        quad::Integrand f = [&sigma, a](double z, double delta) {
            const double d = std::isfinite(delta) ? std::fabs(delta) : z;
            return 2.0 * (sigma.value(d) / d) * std::pow(d, -a);
        };
        const double head_hi = std::min(1.0, s_bot);
        const double expo = 1.0 + a - beta;
        std::vector<SingularitySpec> sings;
        if (expo > 0.0) sings.push_back(SingularitySpec::at_left_endpoint(0.0, std::min(expo, 0.999)));
        double total = quad::integrate_finite(f, 0.0, head_hi, sings, opts).value;
        double tail_from = head_hi;
        const double log_to = std::max(std::max(1.0, s_top), 10.0 * head_hi);
        {
            auto g = [&](double lx) {
                const double x = std::exp(lx);
                return 2.0 * sigma.value(x) * std::pow(x, -a);
            };
            total += quad::integrate_finite(g, std::log(tail_from), std::log(log_to), {}, opts)
                         .value;
            tail_from = log_to;
        }
        total += quad::integrate_semi_infinite(f, tail_from, DecayModel::algebraic(1.0 + a), {},
                                               opts)
                     .value;
        return 8.0 * pi * total;
    }

    // integrand sigma(z)/z * (|y-z|^{-a} + (y+z)^{-a}) on (0, inf)
    quad::Integrand f = [&sigma, a, y](double z, double delta) {
        double near;  // |y - z|
        if (std::isfinite(delta))
            near = std::fabs(delta);
        else
            near = std::fabs(y - z);
        const double dist0 = z;
        return sigma.value(dist0) / dist0 *
               (std::pow(near, -a) + std::pow(y + z, -a));
    };
    quad::Integrand f0 = [&sigma, a, y](double z, double delta) {
        const double d = std::isfinite(delta) ? std::fabs(delta) : z;
        return sigma.value(d) / d * (std::pow(std::fabs(y - d), -a) + std::pow(y + d, -a));
    };
    auto flog = [&sigma, a, y](double lx) {
        const double x = std::exp(lx);
        return sigma.value(x) * (std::pow(std::fabs(y - x), -a) + std::pow(y + x, -a));
    };

    double total = 0.0;
    {
        // [0, y/2]: origin substitution up to A, then log space
        const double A = std::min(0.5 * y, s_bot);
        std::vector<SingularitySpec> s;
        const double expo = 1.0 - beta;
        if (expo > 0.0) s.push_back(SingularitySpec::at_left_endpoint(0.0, std::min(expo, 0.999)));
        total += quad::integrate_finite(f0, 0.0, A, s, opts).value;
        if (A < 0.5 * y)
            total += quad::integrate_finite(flog, std::log(A), std::log(0.5 * y), {}, opts).value;
    }
    total += quad::integrate_finite(f, 0.5 * y, y,
                                    {SingularitySpec::at_right_endpoint(y, a)}, opts)
                 .value;
    total += quad::integrate_finite(f, y, 2.0 * y, {SingularitySpec::at_left_endpoint(y, a)},
                                    opts)
                 .value;
    {
        // [2y, inf): log space across any remaining structure, then the
        // algebraic tail map
        double tail_from = 2.0 * y;
        if (s_top > tail_from) {
            total += quad::integrate_finite(flog, std::log(tail_from), std::log(s_top), {}, opts)
                         .value;
            tail_from = s_top;
        }
        total += quad::integrate_semi_infinite(f, tail_from, DecayModel::algebraic(1.0 + a), {},
                                               opts)
                     .value;
    }
    return 8.0 * pi * total;
}

}  // namespace kernels
}  // namespace shear
