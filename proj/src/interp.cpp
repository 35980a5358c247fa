#include "shear/interp.hpp"

#include <algorithm>
#include <cmath>

namespace shear {

namespace {
// three-point endpoint derivative with Fritsch-Carlson style clamping
double end_slope(double h1, double h2, double s1, double s2) {
    double d = ((2.0 * h1 + h2) * s1 - h1 * s2) / (h1 + h2);
    if (d * s1 <= 0.0)
        d = 0.0;
    else if (s1 * s2 < 0.0 && std::fabs(d) > 3.0 * std::fabs(s1))
        d = 3.0 * s1;
    return d;
}
}  // namespace

Pchip::Pchip(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    const size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw std::invalid_argument("Pchip: need n>=2 matching arrays");
    for (size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("Pchip: abscissae not increasing");

    d_.assign(n, 0.0);
    if (n == 2) {
        d_[0] = d_[1] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    } else {
        std::vector<double> h(n - 1), s(n - 1);
        for (size_t i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            s[i] = (y_[i + 1] - y_[i]) / h[i];
        }
        for (size_t i = 1; i + 1 < n; ++i) {
            if (s[i - 1] * s[i] <= 0.0) {
                d_[i] = 0.0;
            } else {
                const double w1 = 2.0 * h[i] + h[i - 1];
                const double w2 = h[i] + 2.0 * h[i - 1];
                d_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
            }
        }
        d_[0] = end_slope(h[0], h[1], s[0], s[1]);
        d_[n - 1] = end_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
    }

    // uniform fast path
    uniform_ = true;
    x0_ = x_[0];
    dx_ = (x_.back() - x_.front()) / static_cast<double>(n - 1);
    for (size_t i = 0; i < n; ++i) {
        if (std::fabs(x_[i] - (x0_ + dx_ * static_cast<double>(i))) > 1e-9 * std::fabs(dx_)) {
            uniform_ = false;
            break;
        }
    }
}

size_t Pchip::locate(double xq) const {
    const size_t n = x_.size();
    if (uniform_) {
        double t = (xq - x0_) / dx_;
        long i = static_cast<long>(std::floor(t));
        if (i < 0) i = 0;
        if (i > static_cast<long>(n) - 2) i = static_cast<long>(n) - 2;
        return static_cast<size_t>(i);
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), xq);
    size_t i = static_cast<size_t>(it - x_.begin());
    if (i == 0) return 0;
    if (i >= n) return n - 2;
    return i - 1;
}

double Pchip::operator()(double xq) const {
    const size_t i = locate(xq);
    const double h = x_[i + 1] - x_[i];
    const double t = (xq - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

double Pchip::slope(double xq) const {
    const size_t i = locate(xq);
    const double h = x_[i + 1] - x_[i];
    const double t = (xq - x_[i]) / h;
    const double t2 = t * t;
    const double g00 = (6 * t2 - 6 * t) / h;
    const double g10 = 3 * t2 - 4 * t + 1;
    const double g01 = (-6 * t2 + 6 * t) / h;
    const double g11 = 3 * t2 - 2 * t;
    return g00 * y_[i] + g10 * d_[i] + g01 * y_[i + 1] + g11 * d_[i + 1];
}

}  // namespace shear
