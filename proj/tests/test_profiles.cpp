#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shear/profiles.hpp"

using namespace shear;
using namespace shear::cutoff;
using namespace shear::profiles;

namespace {
const double pi = 3.14159265358979323846;

// one reduced-resolution solve at a = 0.5 shared across the cases
struct Solved {
    kernels::HomogeneitySetup setup{0.5};
    kernels::KernelTable table;
    TOperator op;
    ContinuationResult cont;
    ProfileCurve omega, w, hbar, u;
    Solved()
        : table(kernels::build_kernel_table(setup, -30.0, 30.0, 2049)),
          op(setup, table, default_xi_grid(-40.0, 40.0, 1024)),
          cont(continue_to_zero(setup, op, default_eps_schedule(1e-10))) {
        cont.profile.beta_hat = estimate_beta(setup, cont.profile).beta_slope;
        omega = build_omega_curve(setup, cont.profile);
        w = build_w_curve(setup, omega, cont.profile);
        hbar = build_hbar_curve(setup, w, cont.profile);
        u = build_u_curve(setup, hbar);
    }
};

Solved& solved() {
    static Solved s;
    return s;
}
}  // namespace

TEST_CASE("omega") {
    auto& s = solved();
    kernels::SigmaFunction sig = s.cont.profile.sigma_function();

    SUBCASE("positive on sampled zetas") {
        for (size_t i = 0; i < s.omega.abscissae().size(); i += 17)
            CHECK(s.omega.values()[i] > 0.0);
    }
    SUBCASE("large zeta: (z/2) Omega - log z flattens toward C2") {
        const double anchor = s.cont.profile.scale_at_level(0.99);
        double lo = 1e300, hi = -1e300;
        for (double f : {1e2, 1e3, 1e4}) {
            const double z = f * anchor;
            const double d = 0.5 * z * s.omega.at(z) - std::log(z);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        CHECK(hi - lo <= 2e-2);
    }
    SUBCASE("small zeta limit c2 (beta > 1/2 at a=0.5)") {
        REQUIRE(s.cont.profile.beta_hat > 0.5);
        quad::QuadOptions o;
        o.rel_tol = 1e-10;
        auto f = [&](double lx) {
            const double v = sig.value(std::exp(lx));
            return v * v * std::exp(-lx);
        };
        const double c2 = 2.0 * quad::integrate_finite(f, -40.0, 40.0, {}, o).value;
        const double zp = 1e-3 * std::exp(s.cont.profile.xi_grid().front());
        CHECK(omega_at(s.setup, sig, zp) == doctest::Approx(c2).epsilon(1e-2));
    }
    SUBCASE("rejects nonpositive zeta and flat sigma") {
        CHECK_THROWS_AS(omega_at(s.setup, sig, 0.0), std::domain_error);
        kernels::SigmaFunction flat{[](double) { return 1.0; }, 0.0, 0.0,
                                    std::numeric_limits<double>::infinity()};
        CHECK_THROWS_AS(omega_at(s.setup, flat, 1.0), std::domain_error);
    }
}

TEST_CASE("w profile") {
    auto& s = solved();
    const double a = 0.5;

    SUBCASE("integral identity") {
        const double v = w_integral(s.setup, s.w);
        const double target = std::pow(2.0, a) * (1.0 - a) / (4.0 * std::sqrt(2.0) * pi * a);
        CHECK(v == doctest::Approx(target).epsilon(1e-2));
    }
    SUBCASE("large r: r^{a+1} W / log r bounded") {
        const double ysc = s.cont.profile.characteristic_scale();
        for (double f : {1e2, 1e3, 1e4, 1e5}) {
            const double r = f * ysc;
            const double ratio = std::pow(r, a + 1.0) * s.w.at(r) / std::log(r);
            CHECK(ratio > 0.0);
            CHECK(ratio < 100.0);
        }
    }
    SUBCASE("small r slope -> -a (beta > 1/2)") {
        const double ysc = s.cont.profile.characteristic_scale();
        const double r1 = 1e-4 * s.cont.profile.scale_at_level(1e-3);
        const double r2 = 100.0 * r1;
        (void)ysc;
        const double slope = std::log(w_at(s.setup, s.omega, r2) / w_at(s.setup, s.omega, r1)) /
                             std::log(r2 / r1);
        CHECK(std::fabs(slope - (-a)) <= 5e-2);
    }
}

TEST_CASE("w tilde and W0") {
    auto& s = solved();
    const double a = 0.5;
    const double w0 = w0_from_wtilde(s.setup, s.w);

    SUBCASE("W0 = (1-a)/pi") {
        CHECK(w0 == doctest::Approx((1.0 - a) / pi).epsilon(1e-2));
        CHECK(w0 == doctest::Approx(0.1591549).epsilon(1e-2));
    }
    SUBCASE("change-of-variables identity") {
        const double sub = 4.0 * std::sqrt(2.0) / std::pow(2.0, a) * a *
                           w_integral(s.setup, s.w);
        CHECK(std::fabs(w0 - sub) <= 1e-3 * sub);
    }
    SUBCASE("log growth at small s") {
        const double v = w_tilde_at(s.setup, s.w, 1e-6) / std::log(1e6);
        CHECK(v > 0.0);
        CHECK(v < 1e3);
    }
}

TEST_CASE("hbar two routes and normalization") {
    auto& s = solved();
    const double ysc = s.cont.profile.characteristic_scale();

    SUBCASE("routes agree at 50 abscissae") {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double z = std::exp(std::log(1e-5 * ysc) +
                                      (std::log(1e3 * ysc) - std::log(1e-5 * ysc)) * i / 49.0);
            const double h1 = hbar_from_omega(s.setup, s.omega, z);
            const double h2 = hbar_from_w(s.setup, s.w, z);
            CHECK(h1 >= 0.0);
            worst = std::max(worst, std::fabs(h1 - h2) / h2);
        }
        CHECK(worst <= 1e-3);
    }
    SUBCASE("int zeta Hbar = 1") {
        CHECK(zeta_hbar_moment(s.setup, s.hbar) == doctest::Approx(1.0).epsilon(1e-2));
    }
}

TEST_CASE("u profile") {
    auto& s = solved();
    const double a = 0.5;
    SUBCASE("int U = a") {
        CHECK(u_integral(s.setup, s.u) == doctest::Approx(a).epsilon(1.5e-2));
    }
    SUBCASE("substitution identity against a * int y Hbar") {
        const double direct = u_integral(s.setup, s.u);
        const double via = a * zeta_hbar_moment(s.setup, s.hbar);
        CHECK(std::fabs(direct - via) <= 1e-3 * via);
    }
    SUBCASE("nonnegative") {
        for (size_t i = 0; i < s.u.values().size(); i += 11) CHECK(s.u.values()[i] >= 0.0);
    }
}

TEST_CASE("curve plumbing") {
    auto& s = solved();
    SUBCASE("tails continuous at the edges") {
        s.omega.validate();
        s.w.validate();
        s.hbar.validate();
        s.u.validate();
    }
    SUBCASE("bad construction rejected") {
        CHECK_THROWS_AS(ProfileCurve(CurveKind::W, {1.0, 2.0, 3.0, 4.0}, {1.0, -1.0, 1.0, 1.0},
                                     TailModel{}, TailModel{}),
                        std::invalid_argument);
    }
    SUBCASE("chained-identity closure: prop74 accuracy carries to hbar-norm") {
        const double delta74 = std::fabs(check_identity_prop74(s.setup, s.cont.profile) - 1.0);
        const double deltaH = std::fabs(zeta_hbar_moment(s.setup, s.hbar) - 1.0);
        CHECK(deltaH <= 2.0 * delta74 + 5e-3);
    }
}
