#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "shear/kernels.hpp"

using namespace shear::kernels;

namespace {
const double pi = 3.14159265358979323846;

// brute-force oracle for Q(s), s>1: fine trapezoid in log variables on
// [s, 1e8] plus the analytic tail (2/a) s^{-a} at 1e8
double q_oracle_trapezoid(double a, double s) {
    const double v0 = std::log(s), v1 = std::log(1e8);
    const long n = 2'000'000;
    const double h = (v1 - v0) / n;
    auto g = [a](double v) {
        const double z = std::exp(v);
        return std::pow(std::fabs(z - 1.0), -a) + std::pow(z + 1.0, -a);
    };
    double sum = 0.5 * (g(v0) + g(v1));
    for (long i = 1; i < n; ++i) sum += g(v0 + h * i);
    return sum * h + (2.0 / a) * std::pow(1e8, -a);
}

// independent oracle for Lambda with sigma = min(|z|,1) at y = 1:
// three closed-form pieces plus one smooth integral by composite Simpson
double lambda_min_oracle(double a) {
    const double p1 = 1.0 / (1.0 - a);                              // int_0^1 (1-z)^{-a}
    const double p2 = (std::pow(2.0, 1.0 - a) - 1.0) / (1.0 - a);   // int_0^1 (1+z)^{-a}
    const double p3 = pi / std::sin(pi * a);                        // int_1^inf (z-1)^{-a}/z
    // p4 = int_1^inf (z+1)^{-a}/z dz = (1/a) int_0^1 (1+u^{1/a})^{-a} du
    const long n = 200000;
    const double h = 1.0 / n;
    auto f = [a](double u) { return std::pow(1.0 + std::pow(u, 1.0 / a), -a); };
    double simpson = f(0.0) + f(1.0);
    for (long i = 1; i < n; ++i) simpson += (i % 2 ? 4.0 : 2.0) * f(i * h);
    const double p4 = simpson * h / 3.0 / a;
    return 8.0 * pi * (p1 + p2 + p3 + p4);
}

SigmaFunction sigma_min() {
    return SigmaFunction{[](double z) { return std::min(z, 1.0); }, 1.0};
}
}  // namespace

TEST_CASE("q_kernel asymptotics and oracle") {
    HomogeneitySetup s05(0.5);

    SUBCASE("right tail: s^a Q(s) -> 2/a at s=1e6") {
        const double q = q_kernel(s05, 1e6);
        CHECK(std::fabs(std::pow(1e6, 0.5) * q - 4.0) <= 1e-2 * 4.0);
    }
    SUBCASE("left tail: Q(s) - 2 log(1/s) approaches a constant") {
        const double d4 = q_kernel(s05, 1e-4) - 2.0 * std::log(1e4);
        const double d6 = q_kernel(s05, 1e-6) - 2.0 * std::log(1e6);
        CHECK(std::fabs(d4 - d6) <= 1e-2);
        CHECK(std::fabs(d4 - q_left_constant(s05)) <= 1e-2);
    }
    SUBCASE("value at s=2 matches the brute-force oracle") {
        const double oracle = q_oracle_trapezoid(0.5, 2.0);
        CHECK(q_kernel(s05, 2.0) == doctest::Approx(oracle).epsilon(1e-7));
    }
    SUBCASE("strictly decreasing") {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> u(-6.0, 6.0);
        for (int i = 0; i < 30; ++i) {
            double v1 = u(rng), v2 = u(rng);
            if (v1 == v2) continue;
            const double s1 = std::exp(std::min(v1, v2)), s2 = std::exp(std::max(v1, v2));
            CHECK(q_kernel(s05, s1) > q_kernel(s05, s2));
        }
    }
    SUBCASE("domain error") { CHECK_THROWS_AS(q_kernel(s05, 0.0), std::domain_error); }
}

TEST_CASE("kernel table") {
    HomogeneitySetup setup(0.5);
    KernelTable table = build_kernel_table(setup, -12.0, 12.0, 512);

    SUBCASE("grid nodes reproduce q_kernel") {
        const auto& v = table.v_grid();
        const auto& q = table.values();
        for (size_t i = 0; i < v.size(); i += 37) {
            CHECK(q[i] == doctest::Approx(q_kernel(setup, std::exp(v[i]))).epsilon(1e-11));
            // interpolant reproduces nodes exactly (outside the cusp window it
            // is the pchip through them; inside it is direct evaluation)
            CHECK(table.q_log(v[i]) == doctest::Approx(q[i]).epsilon(1e-11));
        }
    }
    SUBCASE("midpoint interpolation error <= 1e-8 relative") {
        const auto& v = table.v_grid();
        for (size_t i = 0; i + 1 < v.size(); i += 23) {
            const double vm = 0.5 * (v[i] + v[i + 1]);
            const double exact = q_kernel(setup, std::exp(vm));
            CHECK(std::fabs(table.q_log(vm) - exact) <= 1e-8 * exact);
        }
    }
    SUBCASE("far-left behaviour matches c0 - 2v") {
        const double v = -20.0;
        CHECK(table.q_log(v) == doctest::Approx(table.left_c0() - 2.0 * v).epsilon(1e-6));
        // fitted constant agrees with the analytic limit constant
        CHECK(table.left_c0() == doctest::Approx(q_left_constant(setup)).epsilon(1e-6));
    }
    SUBCASE("far-right behaviour matches (2/a) e^{-a v}") {
        const double v = 16.0;
        CHECK(table.q_log(v) ==
              doctest::Approx(q_kernel(setup, std::exp(v))).epsilon(1e-6));
        CHECK(table.right_coef() == doctest::Approx(2.0 / 0.5).epsilon(1e-4));
    }
    SUBCASE("values strictly decreasing") {
        const auto& q = table.values();
        for (size_t i = 1; i < q.size(); ++i) CHECK(q[i] < q[i - 1]);
    }
    SUBCASE("n too small rejected") {
        CHECK_THROWS_AS(build_kernel_table(setup, -1.0, 1.0, 8), std::invalid_argument);
    }
}

TEST_CASE("phi kernel") {
    SUBCASE("integral over (0,1) equals sqrt(2) pi") {
        CHECK(phi_integral() == doctest::Approx(std::sqrt(2.0) * pi).epsilon(1e-8));
    }
    SUBCASE("limit pi as s -> 1") {
        CHECK(phi_kernel(1.0 - 1e-6) == doctest::Approx(pi).epsilon(1e-3));
    }
    SUBCASE("log growth as s -> 0") {
        const double d4 = phi_kernel(1e-4) - std::sqrt(2.0) * std::log(1e4);
        const double d6 = phi_kernel(1e-6) - std::sqrt(2.0) * std::log(1e6);
        CHECK(std::fabs(d4 - d6) <= 1e-2);
    }
    SUBCASE("positive and strictly decreasing") {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 1000; ++i) {
            const double s = i / 1001.0;
            const double value = phi_kernel(s, 1e-9);
            CHECK(value > 0.0);
            CHECK(value < prev);
            prev = value;
        }
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(phi_kernel(0.0), std::domain_error);
        CHECK_THROWS_AS(phi_kernel(1.0), std::domain_error);
    }
}

TEST_CASE("lambda_of") {
    HomogeneitySetup setup(0.5);
    SigmaFunction sig = sigma_min();

    SUBCASE("test profile oracle at y=1") {
        const double oracle = lambda_min_oracle(0.5);
        CHECK(lambda_of(setup, sig, 1.0) == doctest::Approx(oracle).epsilon(1e-9));
    }
    SUBCASE("evenness") {
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> u(0.01, 20.0);
        for (int i = 0; i < 20; ++i) {
            const double y = u(rng);
            CHECK(lambda_of(setup, sig, y) == doctest::Approx(lambda_of(setup, sig, -y)));
        }
    }
    SUBCASE("large-y bound: y^a Lambda / log y bounded") {
        for (double y : {1e2, 1e3, 1e4, 1e5, 1e6}) {
            const double ratio =
                lambda_of(setup, sig, y) * std::pow(y, 0.5) / std::log(y);
            CHECK(ratio > 0.5 * 16.0 * pi);
            CHECK(ratio < 3.0 * 16.0 * pi);
        }
    }
    SUBCASE("scaling covariance") {
        // lambda_of(sigma(./c), y*c) = c^{-a} lambda_of(sigma, y)
        const double y = 0.7;
        const double base = lambda_of(setup, sig, y);
        for (double c : {2.0, 10.0}) {
            SigmaFunction scaled{[c](double z) { return std::min(z / c, 1.0); }, 1.0};
            const double left = lambda_of(setup, scaled, y * c);
            CHECK(std::fabs(left - std::pow(c, -0.5) * base) <= 1e-8 * base);
        }
    }
    SUBCASE("y=0 requires beta > a") {
        CHECK(lambda_of(setup, sig, 0.0) > 0.0);  // beta=1 > a
        SigmaFunction flat{[](double) { return 1.0; }, 0.0};
        CHECK_THROWS_AS(lambda_of(setup, flat, 0.0), std::domain_error);
    }
}
