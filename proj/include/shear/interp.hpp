#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace shear {

/// Monotone cubic (Fritsch-Carlson) interpolant.  Preserves local monotonicity
/// of the data; C1 piecewise cubic.
class Pchip {
public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y);

    double operator()(double xq) const;
    /// derivative of the interpolant
    double slope(double xq) const;

    const std::vector<double>& abscissae() const { return x_; }
    const std::vector<double>& values() const { return y_; }
    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }

private:
    size_t locate(double xq) const;
    std::vector<double> x_, y_, d_;
    bool uniform_ = false;
    double x0_ = 0, dx_ = 1;
};

}  // namespace shear
