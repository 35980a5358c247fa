#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "shear/quadrature.hpp"

using namespace shear::quad;

namespace {
const double pi = 3.14159265358979323846;

// |x-c|^{-p} evaluated from the exact offset when available
double power_sing(double x, double delta, double c, double p) {
    const double d = std::isfinite(delta) ? std::fabs(delta) : std::fabs(x - c);
    return std::pow(d, -p);
}
}  // namespace

TEST_CASE("finite: inverse square root at left endpoint") {
    auto r = integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                              {SingularitySpec::at_left_endpoint(0.0, 0.5)});
    CHECK(r.value == doctest::Approx(2.0).epsilon(5e-10));
    CHECK(r.evaluations >= 1);
    CHECK(r.error_estimate >= 0.0);
}

TEST_CASE("finite: double square-root endpoint pair is pi") {
    // Beta-function identity; value independent of the left endpoint.
    for (double a : {0.3, 0.1, 0.7}) {
        Integrand f = [a](double x, double delta) {
            double dl = std::isfinite(delta) && delta > 0 ? delta : x - a;
            double dr = std::isfinite(delta) && delta < 0 ? -delta : 1.0 - x;
            return 1.0 / std::sqrt(dr * dl);
        };
        auto r = integrate_finite(f, a, 1.0,
                                  {SingularitySpec::at_left_endpoint(a, 0.5),
                                   SingularitySpec::at_right_endpoint(1.0, 0.5)});
        CHECK(r.value == doctest::Approx(pi).epsilon(5e-10));
    }
}

TEST_CASE("finite: interior algebraic singularity") {
    Integrand f = [](double x, double delta) { return power_sing(x, delta, 0.5, 0.7); };
    auto r = integrate_finite(f, 0.0, 1.0, {SingularitySpec::at_interior(0.5, 0.7)});
    const double exact = (2.0 / 0.3) * std::pow(0.5, 0.3);
    CHECK(r.value == doctest::Approx(exact).epsilon(5e-10));
}

TEST_CASE("semi-infinite: exponential decay") {
    auto r = integrate_semi_infinite([](double x) { return x * std::exp(-x); }, 0.0,
                                     DecayModel::exponential(1.0));
    CHECK(r.value == doctest::Approx(1.0).epsilon(5e-10));
}

TEST_CASE("semi-infinite: algebraic decay") {
    auto r = integrate_semi_infinite([](double x) { return 1.0 / (x * x); }, 1.0,
                                     DecayModel::algebraic(2.0));
    CHECK(r.value == doctest::Approx(1.0).epsilon(5e-10));
}

TEST_CASE("semi-infinite: Gamma(1/2) with endpoint singularity") {
    Integrand f = [](double x, double delta) {
        const double d = std::isfinite(delta) ? std::fabs(delta) : x;
        return std::exp(-x) / std::sqrt(d);
    };
    auto r = integrate_semi_infinite(f, 0.0, DecayModel::exponential(1.0),
                                     {SingularitySpec::at_left_endpoint(0.0, 0.5)});
    CHECK(r.value == doctest::Approx(std::sqrt(pi)).epsilon(5e-10));
}

TEST_CASE("semi-infinite: interior singularity mapped through") {
    // int_1^inf |x-2|^{-1/2} x^{-3} dx, exact via direct split computation below
    Integrand f = [](double x, double delta) {
        return power_sing(x, delta, 2.0, 0.5) / (x * x * x);
    };
    auto r = integrate_semi_infinite(f, 1.0, DecayModel::algebraic(3.5),
                                     {SingularitySpec::at_interior(2.0, 0.5)});
    auto left = integrate_finite(f, 1.0, 2.0, {SingularitySpec::at_right_endpoint(2.0, 0.5)});
    auto right = integrate_finite(f, 2.0, 50.0, {SingularitySpec::at_left_endpoint(2.0, 0.5)});
    auto tail = integrate_semi_infinite(f, 50.0, DecayModel::algebraic(3.5));
    CHECK(r.value ==
          doctest::Approx(left.value + right.value + tail.value).epsilon(1e-9));
}

TEST_CASE("singularity family: relative error within rel_tol") {
    QuadOptions opts;
    opts.rel_tol = 1e-10;
    for (double p : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        {
            Integrand f = [p](double x, double delta) { return power_sing(x, delta, 0.0, p); };
            auto r = integrate_finite(f, 0.0, 1.0, {SingularitySpec::at_left_endpoint(0.0, p)},
                                      opts);
            const double exact = 1.0 / (1.0 - p);
            CHECK(std::fabs(r.value - exact) <= 1e-10 * exact);
        }
        {
            Integrand f = [p](double x, double delta) { return power_sing(x, delta, 1.0, p); };
            auto r = integrate_finite(f, 0.0, 1.0, {SingularitySpec::at_right_endpoint(1.0, p)},
                                      opts);
            const double exact = 1.0 / (1.0 - p);
            CHECK(std::fabs(r.value - exact) <= 1e-10 * exact);
        }
        {
            const double c = 0.37;
            Integrand f = [p, c](double x, double delta) { return power_sing(x, delta, c, p); };
            auto r = integrate_finite(f, 0.0, 1.0, {SingularitySpec::at_interior(c, p)}, opts);
            const double exact =
                (std::pow(c, 1.0 - p) + std::pow(1.0 - c, 1.0 - p)) / (1.0 - p);
            CHECK(std::fabs(r.value - exact) <= 1e-10 * exact);
        }
    }
}

TEST_CASE("additivity over random smooth integrands") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double c1 = coef(rng), c2 = coef(rng), c3 = coef(rng), w = 1.0 + std::fabs(coef(rng));
        auto f = [=](double x) {
            return c1 * std::sin(w * x) + c2 * std::exp(-x * x) + c3 * x * x;
        };
        const double lo = coef(rng), hi = lo + 0.5 + std::fabs(coef(rng));
        const double mid = 0.5 * (lo + hi);
        auto whole = integrate_finite(f, lo, hi);
        auto left = integrate_finite(f, lo, mid);
        auto right = integrate_finite(f, mid, hi);
        const double gap = std::fabs(whole.value - left.value - right.value);
        CHECK(gap <= whole.error_estimate + left.error_estimate + right.error_estimate + 1e-13);
    }
}

TEST_CASE("error honesty on closed-form corpus") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> pdist(0.1, 0.9);
    for (int trial = 0; trial < 40; ++trial) {
        const double p = pdist(rng);
        Integrand f = [p](double x, double delta) { return power_sing(x, delta, 0.0, p); };
        auto r = integrate_finite(f, 0.0, 1.0, {SingularitySpec::at_left_endpoint(0.0, p)});
        const double exact = 1.0 / (1.0 - p);
        CHECK(std::fabs(r.value - exact) <= 10.0 * std::max(r.error_estimate, 1e-15));
    }
    for (int trial = 0; trial < 40; ++trial) {
        const double k = 0.2 + 3.0 * pdist(rng);
        auto f = [k](double x) { return x * std::exp(-k * x); };
        auto r = integrate_semi_infinite(f, 0.0, DecayModel::exponential(k));
        const double exact = 1.0 / (k * k);
        CHECK(std::fabs(r.value - exact) <= 10.0 * std::max(r.error_estimate, 1e-15));
    }
    for (int trial = 0; trial < 40; ++trial) {
        const double p = 1.5 + 2.0 * pdist(rng);
        auto f = [p](double x) { return std::pow(x, -p); };
        auto r = integrate_semi_infinite(f, 1.0, DecayModel::algebraic(p));
        const double exact = 1.0 / (p - 1.0);
        CHECK(std::fabs(r.value - exact) <= 10.0 * std::max(r.error_estimate, 1e-15));
    }
}

TEST_CASE("NaN from integrand is reported with the abscissa") {
    auto f = [](double x) { return x < 0.5 ? 1.0 : std::nan(""); };
    CHECK_THROWS_AS(integrate_finite(f, 0.0, 1.0), IntegrandFailure);
}

TEST_CASE("declared decay violated fails") {
    auto f = [](double x) { return 1.0 / (1.0 + x); };
    CHECK_THROWS_AS(integrate_semi_infinite(f, 0.0, DecayModel::algebraic(3.0)), QuadFailure);
}

TEST_CASE("bad arguments rejected") {
    SimpleIntegrand zero = [](double) { return 0.0; };
    CHECK_THROWS_AS(integrate_finite(zero, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_finite(zero, 0.0, 1.0, {SingularitySpec::at_interior(2.0, 0.5)}),
                    std::invalid_argument);
    QuadOptions opts;
    opts.rel_tol = -1.0;
    CHECK_THROWS_AS(integrate_finite(zero, 0.0, 1.0, {}, opts), std::invalid_argument);
}
