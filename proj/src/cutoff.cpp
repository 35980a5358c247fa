#include "shear/cutoff.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <limits>

namespace shear {
namespace cutoff {

namespace {

const double pi = 3.14159265358979323846;
const double kInf = std::numeric_limits<double>::infinity();

// cubic Lagrange basis on stencil t in {-1,0,1,2}
double lagrange4(int l, double t) {
    switch (l) {
        case -1: return -t * (t - 1.0) * (t - 2.0) / 6.0;
        case 0: return (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
        case 1: return -(t + 1.0) * t * (t - 2.0) / 2.0;
        default: return (t + 1.0) * t * (t - 1.0) / 6.0;
    }
}

}  // namespace

CutoffProfile::CutoffProfile(std::vector<double> xi, std::vector<double> phi, double a,
                             double epsilon)
    : xi_(std::move(xi)), phi_(std::move(phi)), a_(a), epsilon_(epsilon) {
    if (xi_.size() != phi_.size() || xi_.size() < 8)
        throw std::invalid_argument("CutoffProfile: bad grid");
    interp_ = std::make_shared<Pchip>(xi_, phi_);
    left_slope_ = (phi_[1] - phi_[0]) / (xi_[1] - xi_[0]);
    right_coef_ = -phi_.back() * std::exp(a_ * xi_.back());
    k_bar = 0.0;
    for (size_t i = 0; i < xi_.size(); ++i)
        if (xi_[i] >= 0.0) k_bar = std::max(k_bar, std::fabs(phi_[i]));
}

double CutoffProfile::phi_at(double xi) const {
    if (xi < xi_.front()) return phi_.front() + left_slope_ * (xi - xi_.front());
    if (xi > xi_.back()) {
        const double t = std::log(right_coef_) - a_ * xi;  // -phi in log form
        return t < -700.0 ? 0.0 : -std::exp(t);
    }
    return (*interp_)(xi);
}

double CutoffProfile::sigma_at(double y) const {
    if (!(y > 0.0)) throw std::domain_error("CutoffProfile::sigma_at: y must be positive");
    const double p = phi_at(std::log(y));
    return p < -745.0 ? 0.0 : std::exp(p);
}

kernels::SigmaFunction CutoffProfile::sigma_function() const {
    auto self = *this;  // value copy keeps the evaluator self-contained
    kernels::SigmaFunction f;
    f.value = [self](double y) { return self.sigma_at(y); };
    f.origin_exponent = std::max(beta_hat, left_slope_);
    f.structure_bottom = std::exp(xi_.front());
    f.structure_top = 10.0 * scale_at_level(0.99);
    return f;
}

double CutoffProfile::scale_at_level(double level) const {
    if (!(level > 0.0 && level < 1.0))
        throw std::domain_error("scale_at_level: level must lie in (0,1)");
    const double target = std::log(level);
    if (phi_.back() < target) {
        // crossing lies beyond the grid: invert the right tail model
        return std::exp(std::log(right_coef_ / -target) / a_);
    }
    for (size_t i = xi_.size(); i-- > 1;) {
        if (phi_[i - 1] <= target && phi_[i] >= target) {
            const double t = (target - phi_[i - 1]) / (phi_[i] - phi_[i - 1]);
            return std::exp(xi_[i - 1] + t * (xi_[i] - xi_[i - 1]));
        }
    }
    throw std::runtime_error("scale_at_level: no crossing found");
}

void CutoffProfile::validate() const {
    for (size_t i = 0; i < phi_.size(); ++i) {
        if (!std::isfinite(phi_[i]) || !(phi_[i] < 0.0))
            throw std::runtime_error("CutoffProfile invariant violated: phi must satisfy "
                                     "-inf < phi < 0");
        if (i > 0 && !(phi_[i] > phi_[i - 1]))
            throw std::runtime_error("CutoffProfile invariant violated: phi not strictly "
                                     "increasing");
    }
    // a-priori bounds for xi <= 0: |phi| e^{|phi|} >= a^{-2} e^{-a xi}/(1+eps e^{-xi})
    // (checked in logs) and the affine estimate phi <= (a/2) xi - 2 log(1/a)
    for (size_t i = 0; i < xi_.size(); ++i) {
        const double xi = xi_[i];
        if (xi > 0.0) break;
        const double ap = std::fabs(phi_[i]);
        const double lhs_log = std::log(ap) + ap;
        const double rhs_log = -2.0 * std::log(a_) - a_ * xi -
                               std::log1p(epsilon_ * std::exp(-xi));
        if (lhs_log < rhs_log - 1e-9)
            throw std::runtime_error("CutoffProfile invariant violated: a-priori damping bound");
        if (phi_[i] > 0.5 * a_ * xi + 2.0 * std::log(a_) + 1e-9)
            throw std::runtime_error("CutoffProfile invariant violated: affine a-priori bound");
    }
}

TOperator::TOperator(const kernels::HomogeneitySetup& setup, const kernels::KernelTable& table,
                     std::vector<double> xi_grid, int refine, double extension,
                     double prefactor_scale, int threads)
    : a_(setup.a), xi_(std::move(xi_grid)), refine_(refine), threads_(std::max(1, threads)) {
    kappa_ = 8.0 * pi * a_ / (1.0 - a_) * prefactor_scale;
    n_ = static_cast<long>(xi_.size());
    if (n_ < 8) throw std::invalid_argument("TOperator: grid too small");
    dx_ = (xi_.back() - xi_.front()) / static_cast<double>(n_ - 1);
    dr_ = dx_ / refine;
    left_pad_ = static_cast<long>(std::ceil(extension / dr_));
    const long right_pad = left_pad_;
    m_ = left_pad_ + refine * (n_ - 1) + right_pad + 1;  // source nodes
    z0_ = xi_.front() - left_pad_ * dr_;
    z_last_ = z0_ + (m_ - 1) * dr_;
    c0_ = table.left_c0();

    // kernel K(w) = e^{a w} Q(e^w); beyond the table it has exact asymptotes
    auto K = [&](double w) -> double {
        if (w > 25.0) return table.right_coef();
        if (w < -25.0) return (c0_ - 2.0 * w) * std::exp(a_ * w);
        return std::exp(a_ * w) * table.q_log(w);
    };

    // gamma_l(k) = dr int_0^1 K((k-t) dr) L_l(t) dt, folded into the
    // convolution weights AccW[q] = sum_l gamma_l(q+l)
    const long t_min = left_pad_, t_max = left_pad_ + refine * (n_ - 1);
    q_min_ = t_min - m_;           // h index ranges over [-1, m_]
    const long q_max = t_max + 1;
    const long k_lo = q_min_ - 1, k_hi = q_max + 2;
    std::vector<std::array<double, 4>> gamma(static_cast<size_t>(k_hi - k_lo + 1));
    quad::QuadOptions gopts;
    gopts.rel_tol = 1e-12;
    gopts.abs_floor = 1e-17;
    for (long k = k_lo; k <= k_hi; ++k) {
        std::array<double, 4> g{};
        const bool near_kink = std::labs(k) <= 6;
        for (int l = -1; l <= 2; ++l) {
            auto f = [&](double t) { return K((k - t) * dr_) * lagrange4(l, t); };
            double val;
            if (near_kink) {
                val = quad::integrate_finite(f, 0.0, 1.0, {}, gopts).value;
            } else {
                double err;
                val = quad::gk15_panel(f, 0.0, 1.0, err);
            }
            g[static_cast<size_t>(l + 1)] = dr_ * val;
        }
        gamma[static_cast<size_t>(k - k_lo)] = g;
    }
    weights_.assign(static_cast<size_t>(q_max - q_min_ + 1), 0.0);
    for (long q = q_min_; q <= q_max; ++q) {
        double w = 0.0;
        for (int l = -1; l <= 2; ++l) {
            const long k = q + l;
            if (k < k_lo || k > k_hi) continue;
            w += gamma[static_cast<size_t>(k - k_lo)][static_cast<size_t>(l + 1)];
        }
        weights_[static_cast<size_t>(q - q_min_)] = w;
    }
}

double TOperator::h_model(double z, const Pchip& interp, double s_left, double c_right,
                          double eps) const {
    double phi;
    if (z < xi_.front())
        phi = interp.values().front() + s_left * (z - xi_.front());
    else if (z > xi_.back())
        phi = -c_right * std::exp(-a_ * z);
    else
        phi = interp(z);
    const double e = phi < -745.0 ? 0.0 : std::exp(phi);
    return e / (1.0 + eps * std::exp(-z));
}

std::vector<double> TOperator::apply(const std::vector<double>& phi, double eps) const {
    if (static_cast<long>(phi.size()) != n_)
        throw std::invalid_argument("TOperator::apply: phi size mismatch");
    Pchip interp(xi_, phi);
    double s_left = (phi[1] - phi[0]) / dx_;
    if (s_left < 0.0) s_left = 0.0;  // keep the virtual extension bounded
    const double c_right = -phi[static_cast<size_t>(n_ - 1)] * std::exp(a_ * xi_.back());

    // sampled integrand on the refined grid, with one pad node on each side
    std::vector<double> h(static_cast<size_t>(m_ + 2));
    for (long s = -1; s <= m_; ++s)
        h[static_cast<size_t>(s + 1)] = h_model(z0_ + s * dr_, interp, s_left, c_right, eps);

    std::vector<double> out(static_cast<size_t>(n_));
    auto worker = [&](long i_lo, long i_hi) {
        for (long i = i_lo; i < i_hi; ++i) {
            const long ti = left_pad_ + refine_ * i;
            // conv = sum_s AccW[ti - s] h[s] over source nodes s = -1..m_
            const long base = ti - q_min_;
            const double* W = weights_.data();
            double conv = 0.0;
            for (long s = -1; s <= m_; ++s)
                conv += W[base - s] * h[static_cast<size_t>(s + 1)];
            // analytic remainder over (z_last, inf): Q ~ c0 - 2w there and
            // h ~ 1 - c_R e^{-a z} - eps e^{-z} + c_R^2/2 e^{-2 a z}
            const double xi = xi_[static_cast<size_t>(i)];
            auto tail_term = [&](double b, double coef) {
                return coef * std::exp(-b * z_last_) *
                       ((c0_ - 2.0 * (xi - z_last_)) / b + 2.0 / (b * b));
            };
            double rem = tail_term(a_, 1.0) + tail_term(2.0 * a_, -c_right) +
                         tail_term(a_ + 1.0, -eps) +
                         tail_term(3.0 * a_, 0.5 * c_right * c_right);
            out[static_cast<size_t>(i)] = -kappa_ * (std::exp(-a_ * xi) * conv + rem);
        }
    };
    if (threads_ <= 1) {
        worker(0, n_);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (n_ + threads_ - 1) / threads_;
        for (int t = 0; t < threads_; ++t) {
            const long lo = t * chunk, hi = std::min<long>(n_, lo + chunk);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

std::vector<double> apply_T(const kernels::HomogeneitySetup& setup,
                            const kernels::KernelTable& table, const CutoffProfile& profile,
                            double eps) {
    TOperator op(setup, table, profile.xi_grid());
    return op.apply(profile.phi(), eps);
}

namespace {

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

// Anderson mixing on the residual history (type-II), small fixed depth.
class Anderson {
public:
    explicit Anderson(int depth) : depth_(depth) {}
    std::vector<double> next(const std::vector<double>& x, const std::vector<double>& fx,
                             double damping);

private:
    int depth_;
    std::vector<std::vector<double>> xs_, rs_;
};

std::vector<double> Anderson::next(const std::vector<double>& x, const std::vector<double>& fx,
                                   double damping) {
    const size_t n = x.size();
    std::vector<double> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = fx[i] - x[i];
    xs_.push_back(x);
    rs_.push_back(r);
    if (static_cast<int>(xs_.size()) > depth_ + 1) {
        xs_.erase(xs_.begin());
        rs_.erase(rs_.begin());
    }
    const int m = static_cast<int>(xs_.size()) - 1;
    std::vector<double> out(n);
    if (m == 0) {
        for (size_t i = 0; i < n; ++i) out[i] = x[i] + damping * r[i];
        return out;
    }
    // least squares over residual differences (normal equations, tiny m)
    std::vector<std::vector<double>> dr(m, std::vector<double>(n));
    for (int j = 0; j < m; ++j)
        for (size_t i = 0; i < n; ++i) dr[j][i] = rs_[j + 1][i] - rs_[j][i];
    std::vector<std::vector<double>> ata(m, std::vector<double>(m, 0.0));
    std::vector<double> atb(m, 0.0);
    for (int j = 0; j < m; ++j) {
        for (int k = j; k < m; ++k) {
            double s = 0.0;
            for (size_t i = 0; i < n; ++i) s += dr[j][i] * dr[k][i];
            ata[j][k] = ata[k][j] = s;
        }
        double s = 0.0;
        for (size_t i = 0; i < n; ++i) s += dr[j][i] * r[i];
        atb[j] = s;
    }
    for (int j = 0; j < m; ++j) ata[j][j] *= 1.0 + 1e-10;
    // Gaussian elimination
    std::vector<double> gam = atb;
    for (int c = 0; c < m; ++c) {
        int p = c;
        for (int rr = c + 1; rr < m; ++rr)
            if (std::fabs(ata[rr][c]) > std::fabs(ata[p][c])) p = rr;
        std::swap(ata[c], ata[p]);
        std::swap(gam[c], gam[p]);
        for (int rr = c + 1; rr < m; ++rr) {
            const double f = ata[rr][c] / ata[c][c];
            for (int cc = c; cc < m; ++cc) ata[rr][cc] -= f * ata[c][cc];
            gam[rr] -= f * gam[c];
        }
    }
    for (int c = m - 1; c >= 0; --c) {
        for (int cc = c + 1; cc < m; ++cc) gam[c] -= ata[c][cc] * gam[cc];
        gam[c] /= ata[c][c];
    }
    for (size_t i = 0; i < n; ++i) {
        double xb = x[i] + damping * r[i];
        for (int j = 0; j < m; ++j) {
            const double dx = xs_[j + 1][i] - xs_[j][i];
            xb -= gam[j] * (dx + damping * dr[j][i]);
        }
        out[i] = xb;
    }
    return out;
}

}  // namespace

CutoffProfile solve_regularized(const kernels::HomogeneitySetup& setup, const TOperator& op,
                                double eps, const std::vector<double>& init_phi,
                                const SolveOptions& opts) {
    for (double p : init_phi)
        if (p > 0.0) throw std::invalid_argument("solve_regularized: init phi must be <= 0");
    if (!(opts.tol > 0)) throw std::invalid_argument("solve_regularized: tol must be > 0");

    std::vector<double> phi = init_phi;
    Anderson anderson(opts.anderson_depth);
    double resid = kInf;
    for (int it = 0; it < opts.max_iter; ++it) {
        std::vector<double> t = op.apply(phi, eps);
        resid = sup_distance(t, phi);
        if (resid <= opts.tol) {
            CutoffProfile out(op.xi_grid(), phi, setup.a, eps);
            out.residual_sup = resid;
            out.validate();
            return out;
        }
        if (opts.use_anderson) {
            phi = anderson.next(phi, t, opts.damping);
            for (double& p : phi)
                if (p > 0.0) p = 0.0;  // keep iterates admissible
        } else {
            for (size_t i = 0; i < phi.size(); ++i)
                phi[i] = (1.0 - opts.damping) * phi[i] + opts.damping * t[i];
        }
    }
    throw SolveFailure("solve_regularized: max_iter exceeded", resid);
}

std::vector<double> default_eps_schedule(double eps_final) {
    std::vector<double> s;
    double e = 1.0;
    while (e > eps_final * (1.0 + 1e-12)) {
        s.push_back(e);
        e *= 0.25;
    }
    s.push_back(eps_final);
    return s;
}

std::vector<double> default_xi_grid(double lo, double hi, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    const double d = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = lo + d * i;
    v.back() = hi;
    return v;
}

ContinuationResult continue_to_zero(const kernels::HomogeneitySetup& setup, const TOperator& op,
                                    const std::vector<double>& schedule,
                                    const SolveOptions& opts) {
    if (schedule.empty()) throw std::invalid_argument("continue_to_zero: empty schedule");
    for (size_t i = 1; i < schedule.size(); ++i)
        if (!(schedule[i] < schedule[i - 1]))
            throw std::invalid_argument("continue_to_zero: schedule must be strictly decreasing");

    ContinuationResult res;
    std::vector<double> phi(op.xi_grid().size(), 0.0);
    CutoffProfile prof;
    for (size_t k = 0; k < schedule.size(); ++k) {
        prof = solve_regularized(setup, op, schedule[k], phi, opts);
        res.eps_steps.push_back(schedule[k]);
        if (k > 0) res.step_distances.push_back(sup_distance(prof.phi(), phi));
        phi = prof.phi();
    }
    const size_t nd = res.step_distances.size();
    if (nd >= 3) {
        const double d1 = res.step_distances[nd - 3], d2 = res.step_distances[nd - 2],
                     d3 = res.step_distances[nd - 1];
        if (!(d2 < d1 && d3 < d2))
            throw std::runtime_error(
                "continue_to_zero: continuation not Cauchy over the last three steps (" +
                std::to_string(d1) + ", " + std::to_string(d2) + ", " + std::to_string(d3) + ")");
    }
    res.profile = prof;
    res.profile.validate();
    return res;
}

BetaEstimate estimate_beta(const kernels::HomogeneitySetup& setup, const CutoffProfile& profile) {
    if (profile.epsilon() > 1e-6)
        throw std::invalid_argument("estimate_beta: profile must be converged at eps <= 1e-6");
    const double a = setup.a;
    const auto& xi = profile.xi_grid();
    const auto& phi = profile.phi();
    BetaEstimate out;

    // regression over the leftmost decade of the grid where sigma < 1e-3
    {
        const double cut = std::log(1e-3);
        double x0 = 0.0;
        bool found = false;
        for (size_t i = 0; i < xi.size(); ++i) {
            if (phi[i] < cut) {
                x0 = xi[i];
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("estimate_beta: no region with sigma < 1e-3");
        const double x1 = x0 + std::log(10.0);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        long cnt = 0;
        for (size_t i = 0; i < xi.size(); ++i) {
            if (xi[i] < x0 || xi[i] > x1) continue;
            sx += xi[i];
            sy += phi[i];
            sxx += xi[i] * xi[i];
            sxy += xi[i] * phi[i];
            ++cnt;
        }
        out.beta_slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    }

    // prefactored integral route: 2 kappa int e^{phi - a xi} dxi
    {
        const double kappa = 8.0 * pi * a / (1.0 - a);
        double grid = 0.0;
        for (size_t i = 0; i + 1 < xi.size(); ++i) {
            double err;
            grid += quad::gk15_panel(
                [&](double x) { return std::exp(profile.phi_at(x) - a * x); }, xi[i], xi[i + 1],
                err);
        }
        const double s_left = profile.left_tail_slope();
        double left = 0.0;
        if (s_left > a + 1e-12) {
            left = std::exp(phi.front() - a * xi.front()) / (s_left - a);
        } else {
            out.marginal = true;
        }
        const double cR = profile.right_tail_coef();
        const double right = std::exp(-a * xi.back()) / a -
                             cR * std::exp(-2.0 * a * xi.back()) / (2.0 * a);
        out.beta_integral = 2.0 * kappa * (grid + left + right);
    }
    return out;
}

double check_identity_prop74(const kernels::HomogeneitySetup& setup,
                             const CutoffProfile& profile, double sigma_scale) {
    const double a = setup.a;
    kernels::SigmaFunction sig = profile.sigma_function();
    kernels::SigmaFunction scaled{[sig, sigma_scale](double y) { return sigma_scale * sig.value(y); },
                                  sig.origin_exponent};
    // D = int Lambda(e^xi) sigma(e^xi) dxi over the grid range plus tails
    quad::QuadOptions outer;
    outer.rel_tol = 1e-7;
    auto f = [&](double x) {
        const double y = std::exp(x);
        const double s = scaled.value(y);
        if (s <= 0.0) return 0.0;
        return kernels::lambda_of(setup, scaled, y, 1e-8) * s;
    };
    const double lo = profile.xi_grid().front(), hi = profile.xi_grid().back();
    double d = quad::integrate_finite(f, lo, hi, {}, outer).value;
    d += quad::integrate_semi_infinite(f, hi, quad::DecayModel::exponential(a), {}, outer).value;
    return (a / (1.0 - a)) * d;
}

}  // namespace cutoff
}  // namespace shear
