#include "shear/profiles.hpp"

#include <cmath>
#include <limits>

namespace shear {
namespace profiles {

namespace {
const double pi = 3.14159265358979323846;
const double sqrt2 = 1.4142135623730951;

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> x(static_cast<size_t>(n));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        x[static_cast<size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return x;
}

// pure power tail through the last two nodes, anchored at the edge
TailModel fit_power_tail(const std::vector<double>& x, const std::vector<double>& v, bool left) {
    TailModel t;
    const size_t n = x.size();
    const size_t e = left ? 0 : n - 1;
    const size_t p = left ? 1 : n - 2;
    t.x_edge = x[e];
    t.amp = v[e];
    t.power = std::log(v[p] / v[e]) / std::log(x[p] / x[e]);
    t.logcoef = 0.0;
    return t;
}

// fixed power with a fitted log correction, anchored at the edge
TailModel fit_logpower_tail(const std::vector<double>& x, const std::vector<double>& v,
                            bool left, double power) {
    TailModel t;
    const size_t n = x.size();
    const size_t e = left ? 0 : n - 1;
    const size_t p = left ? 1 : n - 2;
    t.x_edge = x[e];
    t.power = power;
    t.amp = v[e];
    const double dl = std::log(x[p] / x[e]);
    t.logcoef = (v[p] * std::pow(x[p] / x[e], -power) - t.amp) / dl;
    return t;
}

}  // namespace

std::string curve_kind_name(CurveKind kind) {
    switch (kind) {
        case CurveKind::Omega: return "Omega";
        case CurveKind::W: return "W";
        case CurveKind::Wtilde: return "Wtilde";
        case CurveKind::Hbar: return "Hbar";
        case CurveKind::U: return "U";
    }
    return "?";
}

double TailModel::log_at(double lx) const {
    const double d = lx - std::log(x_edge);
    const double f = amp + logcoef * d;
    if (f <= 0.0) return -std::numeric_limits<double>::infinity();
    return power * d + std::log(f);
}

double TailModel::at_log(double lx) const {
    const double lv = log_at(lx);
    return lv < -700.0 ? 0.0 : std::exp(lv);
}

ProfileCurve::ProfileCurve(CurveKind kind, std::vector<double> abscissae,
                           std::vector<double> values, TailModel left, TailModel right)
    : kind_(kind), x_(std::move(abscissae)), v_(std::move(values)), left_(left), right_(right) {
    if (x_.size() != v_.size() || x_.size() < 4)
        throw std::invalid_argument("ProfileCurve: bad sizes");
    lx_.resize(x_.size());
    std::vector<double> lv(x_.size());
    for (size_t i = 0; i < x_.size(); ++i) {
        if (!(x_[i] > 0.0) || !(v_[i] > 0.0) || !std::isfinite(v_[i]))
            throw std::invalid_argument("ProfileCurve: needs positive finite samples");
        lx_[i] = std::log(x_[i]);
        lv[i] = std::log(v_[i]);
    }
    interp_ = Pchip(lx_, lv);
}

double ProfileCurve::at_log(double lx) const {
    if (lx < lx_.front()) return left_.at_log(lx);
    if (lx > lx_.back()) return right_.at_log(lx);
    return std::exp(interp_(lx));
}

void ProfileCurve::validate() const {
    for (size_t i = 0; i < v_.size(); ++i)
        if (!std::isfinite(v_[i]) || v_[i] < 0.0)
            throw std::runtime_error("ProfileCurve invariant violated: values finite and >= 0");
    // tail models anchored at the edges reproduce the edge values
    for (bool left : {true, false}) {
        const size_t e = left ? 0 : v_.size() - 1;
        const double t = left ? left_.at_log(lx_[e]) : right_.at_log(lx_[e]);
        if (std::fabs(t - v_[e]) > 1e-4 * v_[e])
            throw std::runtime_error("ProfileCurve invariant violated: tail discontinuous");
    }
}

double omega_at(const kernels::HomogeneitySetup& setup, const kernels::SigmaFunction& sigma,
                double zeta, double rel_tol) {
    if (!(zeta > 0.0)) throw std::domain_error("omega_at: zeta must be positive");
    const double beta = sigma.origin_exponent;
    if (!(beta > 0.0)) throw std::domain_error("omega_at: sigma origin exponent must be > 0");
    (void)setup;

    // Written in d = |eta -+ zeta| with u = log d, which absorbs the
    // sigma(d)/d singularity into the measure and resolves the many decades
    // the integrand can span:
    //   Omega = 2 [ int_{-inf}^{log zeta} s(2z-e^u) s(e^u)/(2z-e^u) du
    //             + int_{-inf}^{ inf    } s(2z+e^u) s(e^u)/(2z+e^u) du ]
    const double lz = std::log(zeta);
    quad::QuadOptions opts;
    opts.rel_tol = rel_tol;
    const double down_rate = std::max(0.05, 0.9 * std::min(beta, 1.0));
    // below l_bot sigma is a pure power, above l_top it is constant; the
    // finite pieces cover the structured decades explicitly
    const double l_bot = sigma.structure_bottom > 0.0
                             ? std::log(sigma.structure_bottom) - 2.0
                             : lz;
    const double l_top = std::isfinite(sigma.structure_top)
                             ? std::log(sigma.structure_top) + 2.0
                             : lz;

    quad::SimpleIntegrand near_side = [&sigma, zeta](double u) {
        const double d = std::exp(u);
        if (d < 1e-300) return 0.0;
        const double other = 2.0 * zeta - d;
        return sigma.value(other) / other * sigma.value(d);
    };
    quad::SimpleIntegrand far_side = [&sigma, zeta](double u) {
        const double d = std::exp(u);
        if (d < 1e-300) return 0.0;
        const double other = 2.0 * zeta + d;
        return sigma.value(other) / other * sigma.value(d);
    };

    double total = 0.0;
    // descending halves (near side fully, far side below lz)
    for (const quad::SimpleIntegrand* side : {&near_side, &far_side}) {
        const double split = std::min(lz, l_bot);
        if (split < lz)
            total += quad::integrate_finite(*side, split, lz, {}, opts).value;
        total += quad::integrate_semi_infinite([&](double v) { return (*side)(split - v); },
                                               0.0, quad::DecayModel::exponential(down_rate),
                                               {}, opts)
                     .value;
    }
    // ascending far side
    {
        const double split = std::max(lz, l_top);
        if (split > lz)
            total += quad::integrate_finite(far_side, lz, split, {}, opts).value;
        total += quad::integrate_semi_infinite([&](double v) { return far_side(split + v); },
                                               0.0, quad::DecayModel::exponential(0.9), {}, opts)
                     .value;
    }
    return 2.0 * total;
}

namespace {
int grid_points(double lo, double hi, int per_decade) {
    return std::max(64, static_cast<int>(std::ceil(per_decade * std::log10(hi / lo))));
}
}  // namespace

ProfileCurve build_omega_curve(const kernels::HomogeneitySetup& setup,
                               const cutoff::CutoffProfile& profile, int points_per_decade) {
    const double scale = profile.characteristic_scale();
    kernels::SigmaFunction sigma = profile.sigma_function();
    // span [1e-4,1e6] x scale, extended left into the power-law region when
    // beta < 1/2 puts the small-zeta regime there, and right so the
    // Lemma-regime window [1e2,1e4] x (end-of-transition scale) is sampled
    const double lo = std::min(1e-4 * scale, 1e-6 * profile.scale_at_level(1e-3));
    const double hi = std::max(1e6 * scale, 3e4 * profile.scale_at_level(0.99));
    std::vector<double> x = log_spaced(lo, hi, grid_points(lo, hi, points_per_decade));
    std::vector<double> v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = omega_at(setup, sigma, x[i]);
    TailModel left = fit_power_tail(x, v, true);
    TailModel right = fit_logpower_tail(x, v, false, -1.0);
    ProfileCurve curve(CurveKind::Omega, std::move(x), std::move(v), left, right);
    curve.validate();
    return curve;
}

double w_at(const kernels::HomogeneitySetup& setup, const ProfileCurve& omega, double r,
            double rel_tol) {
    if (!(r > 0.0)) throw std::domain_error("w_at: r must be positive");
    const double a = setup.a;
    const double lr = std::log(r);
    // z = r/sin(theta): W = sqrt2 r^{-a} int_0^{pi/2} sin^{a-1}(th)
    //                        (cos(th/2)+sin(th/2)) Omega(r/sin th) dth
    quad::Integrand f = [&omega, lr, a](double th, double delta) {
        const double s = std::isfinite(delta) ? delta : th;  // theta itself near 0
        const double sth = std::sin(th);
        const double lsin = th < 1e-6 ? std::log(s) : std::log(sth);
        return std::pow(th < 1e-6 ? s : sth, a - 1.0) *
               (std::cos(0.5 * th) + std::sin(0.5 * th)) * omega.at_log(lr - lsin);
    };
    quad::QuadOptions opts;
    opts.rel_tol = rel_tol;
    auto res = quad::integrate_finite(
        f, 0.0, 0.5 * pi, {quad::SingularitySpec::at_left_endpoint(0.0, 1.0 - a)}, opts);
    return sqrt2 * std::exp(-a * lr) * res.value;
}

ProfileCurve build_w_curve(const kernels::HomogeneitySetup& setup, const ProfileCurve& omega,
                           const cutoff::CutoffProfile& profile, int points_per_decade) {
    const double scale = profile.characteristic_scale();
    const double lo = std::min(1e-6 * scale, 1e-7 * profile.scale_at_level(1e-3));
    const double hi = 1e6 * scale;
    std::vector<double> x = log_spaced(lo, hi, grid_points(lo, hi, points_per_decade));
    std::vector<double> v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = w_at(setup, omega, x[i]);
    TailModel left = fit_power_tail(x, v, true);
    TailModel right = fit_logpower_tail(x, v, false, -(1.0 + setup.a));
    ProfileCurve curve(CurveKind::W, std::move(x), std::move(v), left, right);
    curve.validate();
    return curve;
}

double w_tilde_at(const kernels::HomogeneitySetup& setup, const ProfileCurve& w, double s) {
    if (!(s > 0.0)) throw std::domain_error("w_tilde_at: s must be positive");
    const double a = setup.a;
    const double ls = std::log(s);
    const double lv = std::log(4.0 * sqrt2 / std::pow(2.0, a)) - (1.0 / a + 1.0) * ls;
    const double wv = w.at_log(-ls / a);
    if (wv <= 0.0) return 0.0;
    const double out = lv + std::log(wv);
    return out < -700.0 ? 0.0 : std::exp(out);
}

namespace {

// integral of a curve against x^{moment} dx over its grid plus analytic tails
double curve_moment(const ProfileCurve& c, double moment) {
    quad::QuadOptions opts;
    opts.rel_tol = 1e-10;
    // grid part in log x
    auto f = [&](double lx) { return c.at_log(lx) * std::exp((moment + 1.0) * lx); };
    double total =
        quad::integrate_finite(f, std::log(c.x_lo()), std::log(c.x_hi()), {}, opts).value;
    // left tail: v ~ amp (x/xe)^p (log factor small near the edge, kept by quadrature)
    {
        const TailModel& t = c.left_tail();
        auto g = [&](double lx) {
            const double lv = t.log_at(lx) + (moment + 1.0) * lx;
            return lv < -700.0 ? 0.0 : std::exp(lv);
        };
        const double l_hi = std::log(c.x_lo());
        // decays toward -inf provided p + moment + 1 > 0
        if (t.power + moment + 1.0 > 1e-9) {
            auto gg = [&](double u) { return g(l_hi - u); };
            total += quad::integrate_semi_infinite(
                         gg, 0.0, quad::DecayModel::exponential(t.power + moment + 1.0), {},
                         opts)
                         .value;
        } else {
            throw std::runtime_error("curve_moment: divergent left tail");
        }
    }
    {
        const TailModel& t = c.right_tail();
        auto g = [&](double lx) {
            const double lv = t.log_at(lx) + (moment + 1.0) * lx;
            return lv < -700.0 ? 0.0 : std::exp(lv);
        };
        const double l_lo = std::log(c.x_hi());
        if (t.power + moment + 1.0 < -1e-9) {
            auto gg = [&](double u) { return g(l_lo + u); };
            total += quad::integrate_semi_infinite(
                         gg, 0.0, quad::DecayModel::exponential(-(t.power + moment + 1.0)), {},
                         opts)
                         .value;
        } else {
            throw std::runtime_error("curve_moment: divergent right tail");
        }
    }
    return total;
}

}  // namespace

double w_integral(const kernels::HomogeneitySetup&, const ProfileCurve& w) {
    return curve_moment(w, 0.0);
}

double w0_from_wtilde(const kernels::HomogeneitySetup& setup, const ProfileCurve& w) {
    // int_0^inf Wtilde(s) ds in log s; substitution-free direct route
    const double a = setup.a;
    quad::QuadOptions opts;
    opts.rel_tol = 1e-9;
    auto f = [&](double ls) {
        const double s = std::exp(ls);
        return w_tilde_at(setup, w, s) * s;
    };
    // s-range mapped from the W grid: s = z^{-a}
    const double ls_lo = -a * std::log(w.x_hi()) - 5.0;
    const double ls_hi = -a * std::log(w.x_lo()) + 5.0;
    double total = quad::integrate_finite(f, ls_lo, ls_hi, {}, opts).value;
    // remaining tails: Wtilde*s ~ s log(1/s) as s->0; ~ s^{(p-1)/a} as s->inf
    // with p the fitted left power of W
    auto left = [&](double u) { return f(ls_lo - u); };
    total += quad::integrate_semi_infinite(left, 0.0, quad::DecayModel::exponential(0.9), {},
                                           opts)
                 .value;
    const double p_left = -w.left_tail().power;
    const double rate = std::max(0.05, 0.9 * (1.0 - p_left) / a);
    auto right = [&](double u) { return f(ls_hi + u); };
    total += quad::integrate_semi_infinite(right, 0.0, quad::DecayModel::exponential(rate), {},
                                           opts)
                 .value;
    return total;
}

double phi_kernel_safe(double s, double rel_tol) {
    if (s >= 1.0 - 5e-12) return pi;
    if (s < 1e-8) {
        // Phi(s) = C - sqrt2 log s below the anchor, exact to O(anchor)
        static const double c_phi =
            kernels::phi_kernel(1e-8, 1e-12) + sqrt2 * std::log(1e-8);
        return c_phi - sqrt2 * std::log(s);
    }
    return kernels::phi_kernel(s, rel_tol);
}

double hbar_from_omega(const kernels::HomogeneitySetup& setup, const ProfileCurve& omega,
                       double zeta, double rel_tol) {
    if (!(zeta > 0.0)) throw std::domain_error("hbar_from_omega: zeta must be positive");
    const double a = setup.a;
    const double lz = std::log(zeta);
    // z = zeta/sin(psi):
    // Hbar = pref * zeta^{-(1+a)} int_0^{pi/2} sin^{a-1} cos(psi)
    //        Phi(sin psi) Omega(zeta/sin psi) dpsi
    quad::Integrand f = [&omega, lz, a](double psi, double delta) {
        const double s = std::isfinite(delta) ? delta : psi;
        const double sp = std::sin(psi);
        const double lsin = psi < 1e-6 ? std::log(s) : std::log(sp);
        const double sinpow = std::pow(psi < 1e-6 ? s : sp, a - 1.0);
        return sinpow * std::cos(psi) * phi_kernel_safe(std::exp(lsin), 1e-9) *
               omega.at_log(lz - lsin);
    };
    quad::QuadOptions opts;
    opts.rel_tol = rel_tol;
    auto res = quad::integrate_finite(
        f, 0.0, 0.5 * pi, {quad::SingularitySpec::at_left_endpoint(0.0, 1.0 - a)}, opts);
    const double pref = 8.0 * sqrt2 / std::pow(2.0, a) * a / (1.0 - a);
    return pref * std::exp(-(1.0 + a) * lz) * res.value;
}

double hbar_from_w(const kernels::HomogeneitySetup& setup, const ProfileCurve& w, double zeta,
                   double rel_tol) {
    if (!(zeta > 0.0)) throw std::domain_error("hbar_from_w: zeta must be positive");
    const double a = setup.a;
    const double lz = std::log(zeta);
    // s = zeta cosh(t): Hbar = pref (1/zeta) int_0^inf W(zeta cosh t) dt
    auto f = [&w, lz](double t) {
        const double lcosh = t > 20.0 ? t - std::log(2.0) : std::log(std::cosh(t));
        return w.at_log(lz + lcosh);
    };
    quad::QuadOptions opts;
    opts.rel_tol = rel_tol;
    // W decays like its slowest power along the cosh ray; understate the rate
    const double rate =
        std::max(0.05, 0.9 * std::min(-w.left_tail().power, 1.0 + a));
    auto res = quad::integrate_semi_infinite(f, 0.0, quad::DecayModel::exponential(rate), {},
                                             opts);
    const double pref = 8.0 * sqrt2 / std::pow(2.0, a) * a / (1.0 - a);
    return pref * std::exp(-lz) * res.value;
}

ProfileCurve build_hbar_curve(const kernels::HomogeneitySetup& setup, const ProfileCurve& w,
                              const cutoff::CutoffProfile& profile, int points_per_decade) {
    const double scale = profile.characteristic_scale();
    const double lo = std::min(1e-6 * scale, 1e-7 * profile.scale_at_level(1e-3));
    const double hi = 1e4 * scale;
    std::vector<double> x = log_spaced(lo, hi, grid_points(lo, hi, points_per_decade));
    std::vector<double> v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = hbar_from_w(setup, w, x[i]);
    TailModel left = fit_power_tail(x, v, true);
    TailModel right = fit_logpower_tail(x, v, false, -(2.0 + setup.a));
    ProfileCurve curve(CurveKind::Hbar, std::move(x), std::move(v), left, right);
    curve.validate();
    return curve;
}

double zeta_hbar_moment(const kernels::HomogeneitySetup&, const ProfileCurve& hbar) {
    return curve_moment(hbar, 1.0);
}

double u_at(const kernels::HomogeneitySetup& setup, const ProfileCurve& hbar, double zeta) {
    if (!(zeta > 0.0)) throw std::domain_error("u_at: zeta must be positive");
    const double a = setup.a;
    const double lz = std::log(zeta);
    const double h = hbar.at_log(-lz / a);
    if (h <= 0.0) return 0.0;
    const double lv = -(2.0 + a) / a * lz + std::log(h);
    return lv < -700.0 ? 0.0 : std::exp(lv);
}

ProfileCurve build_u_curve(const kernels::HomogeneitySetup& setup, const ProfileCurve& hbar,
                           int n) {
    const double a = setup.a;
    // the U grid is the image of the Hbar grid under zeta -> zeta^{-a}
    const double lo = std::pow(hbar.x_hi(), -a) * 1.05;
    const double hi = std::pow(hbar.x_lo(), -a) * 0.95;
    std::vector<double> x = log_spaced(lo, hi, n);
    std::vector<double> v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = u_at(setup, hbar, x[i]);
    TailModel left = fit_logpower_tail(x, v, true, 0.0);
    TailModel right = fit_logpower_tail(x, v, false, -1.0 / a);
    ProfileCurve curve(CurveKind::U, std::move(x), std::move(v), left, right);
    curve.validate();
    return curve;
}

double u_integral(const kernels::HomogeneitySetup&, const ProfileCurve& u) {
    return curve_moment(u, 0.0);
}

}  // namespace profiles
}  // namespace shear
