#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "shear/conservation.hpp"
#include "shear/profiles.hpp"

using namespace shear;
using namespace shear::conservation;

namespace {
const double pi = 3.14159265358979323846;

// closed form for unit Gaussians: loss = 8 pi 2^{-a} Gamma((1-a)/2)/sqrt(pi)
double loss_oracle(double a) {
    return 8.0 * pi * std::pow(2.0, -a) * std::tgamma(0.5 * (1.0 - a)) / std::sqrt(pi);
}
}  // namespace

TEST_CASE("gain equals loss for gaussian densities") {
    kernels::HomogeneitySetup setup(0.5);
    TestDensity td = gaussian_density();
    const double loss = reduced_loss_mass(setup, td);
    const double gain = reduced_gain_mass(setup, td, 10.0, true);
    CHECK(std::fabs(gain - loss) <= 1e-5 * loss);
    CHECK(loss == doctest::Approx(loss_oracle(0.5)).epsilon(1e-7));
}

TEST_CASE("translation invariance") {
    kernels::HomogeneitySetup setup(0.5);
    TestDensity base = gaussian_density(0.0);
    TestDensity shifted = gaussian_density(3.0);
    const double l0 = reduced_loss_mass(setup, base);
    const double l3 = reduced_loss_mass(setup, shifted);
    const double g0 = reduced_gain_mass(setup, base, 10.0);
    const double g3 = reduced_gain_mass(setup, shifted, 10.0);
    CHECK(std::fabs(l3 - l0) <= 1e-6 * l0);
    CHECK(std::fabs(g3 - g0) <= 1e-6 * g0);
}

TEST_CASE("inner Phi identity") {
    // int_0^{u} Phi(xi/u) dxi = sqrt2 pi u, checked by direct quadrature
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ud(0.5, 200.0);
    for (int i = 0; i < 10; ++i) {
        const double u = ud(rng);
        auto f = [&](double xi) { return profiles::phi_kernel_safe(xi / u, 1e-10); };
        quad::QuadOptions o;
        o.rel_tol = 1e-10;
        const double v = quad::integrate_finite(f, 0.0, u, {}, o).value;
        CHECK(std::fabs(v - std::sqrt(2.0) * pi * u) <= 1e-8 * v);
    }
}

TEST_CASE("t-independence of the gain mass (audit route)") {
    kernels::HomogeneitySetup setup(0.5);
    TestDensity td = gaussian_density();
    const double g1 = reduced_gain_mass(setup, td, 1.0, false);
    const double g10 = reduced_gain_mass(setup, td, 10.0, false);
    const double g100 = reduced_gain_mass(setup, td, 100.0, false);
    CHECK(std::fabs(g10 - g1) <= 1e-6 * g1);
    CHECK(std::fabs(g100 - g1) <= 1e-6 * g1);
}

TEST_CASE("quadratic scaling in g1") {
    kernels::HomogeneitySetup setup(0.4);
    TestDensity td = gaussian_density();
    TestDensity doubled = td;
    auto base_g1 = td.g1;
    doubled.g1 = [base_g1](double x) { return 2.0 * base_g1(x); };
    const double l1 = reduced_loss_mass(setup, td);
    const double l2 = reduced_loss_mass(setup, doubled);
    const double g1v = reduced_gain_mass(setup, td, 10.0);
    const double g2v = reduced_gain_mass(setup, doubled, 10.0);
    CHECK(std::fabs(l2 - 4.0 * l1) <= 1e-10 * l2);
    CHECK(std::fabs(g2v - 4.0 * g1v) <= 1e-10 * g2v);
}

TEST_CASE("angular identity") {
    SUBCASE("full value 2") {
        CHECK(std::fabs(f_gain_angular_identity() - 2.0) <= 1e-12);
    }
    SUBCASE("half interval below 2") { CHECK(f_gain_angular_partial(0.25 * pi) < 2.0); }
    SUBCASE("random upper limits against the antiderivative") {
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> ud(0.0, 0.5 * pi);
        for (int i = 0; i < 5; ++i) {
            const double up = ud(rng);
            CHECK(f_gain_angular_partial(up) ==
                  doctest::Approx(f_gain_angular_closed_form(up)).epsilon(1e-12));
        }
    }
}

TEST_CASE("domain checks") {
    kernels::HomogeneitySetup setup(0.5);
    TestDensity td = gaussian_density();
    CHECK_THROWS_AS(reduced_gain_mass(setup, td, 0.5), std::domain_error);
}
