#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shear {
namespace quad {

/// Outcome of an adaptive integration.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;  // absolute
    long evaluations = 0;
};

/// An integrable algebraic singularity of the integrand, |x-location|^{-exponent}
/// with exponent in (0,1).  `side` says where the integration domain sits
/// relative to the singular point.
struct SingularitySpec {
    enum class Side { left, right, interior };
    double location = 0.0;
    double exponent = 0.5;
    Side side = Side::interior;

    static SingularitySpec at_left_endpoint(double loc, double expo) {
        return {loc, expo, Side::left};
    }
    static SingularitySpec at_right_endpoint(double loc, double expo) {
        return {loc, expo, Side::right};
    }
    static SingularitySpec at_interior(double loc, double expo) {
        return {loc, expo, Side::interior};
    }
};

/// Declared decay of the integrand on a semi-infinite domain.
struct DecayModel {
    enum class Kind { algebraic, exponential };
    Kind kind = Kind::exponential;
    double parameter = 1.0;  // p>1 for algebraic x^{-p}, rate>0 for exponential

    static DecayModel algebraic(double p) { return {Kind::algebraic, p}; }
    static DecayModel exponential(double rate) { return {Kind::exponential, rate}; }
};

struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_floor = 1e-14;
    int max_depth = 60;
    long max_panels = 40000;
};

/// Thrown when the adaptive scheme cannot meet the requested tolerance or the
/// integrand misbehaves; carries the best estimate obtained so far.
class QuadFailure : public std::runtime_error {
public:
    QuadFailure(const std::string& what, double best, double err_bound)
        : std::runtime_error(what), best_estimate(best), error_bound(err_bound) {}
    double best_estimate;
    double error_bound;
};

/// Thrown when the integrand produces a non-finite value.
class IntegrandFailure : public std::runtime_error {
public:
    IntegrandFailure(const std::string& what, double x)
        : std::runtime_error(what), abscissa(x) {}
    double abscissa;
};

/// Integrand signature: f(x, delta).  `delta` is the signed offset x - c from
/// the currently active singular endpoint c, computed exactly in the
/// substituted variable (no cancellation near c), or +inf on panels without
/// an active singularity.  Integrands with an algebraic factor should
/// evaluate it from |delta|; smooth integrands can ignore it.
using Integrand = std::function<double(double, double)>;
using SimpleIntegrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod integration of f over [lo,hi].  Interior singular
/// points split the interval; singular endpoints are removed exactly by the
/// substitution x = location ± u^{1/(1-exponent)}.
QuadResult integrate_finite(const Integrand& f, double lo, double hi,
                            const std::vector<SingularitySpec>& sings = {},
                            const QuadOptions& opts = {});
QuadResult integrate_finite(const SimpleIntegrand& f, double lo, double hi,
                            const std::vector<SingularitySpec>& sings = {},
                            const QuadOptions& opts = {});

/// Integration over [lo, inf) with the tail mapped to a finite interval by a
/// substitution matching the declared decay.  Finite singular points are
/// mapped through.
QuadResult integrate_semi_infinite(const Integrand& f, double lo, DecayModel decay,
                                   const std::vector<SingularitySpec>& sings = {},
                                   const QuadOptions& opts = {});
QuadResult integrate_semi_infinite(const SimpleIntegrand& f, double lo, DecayModel decay,
                                   const std::vector<SingularitySpec>& sings = {},
                                   const QuadOptions& opts = {});

/// Single non-adaptive 15-point Gauss-Kronrod panel; returns the K15 value and
/// writes |K15-G7| based error to err.  Building block, exposed for reuse.
double gk15_panel(const SimpleIntegrand& f, double lo, double hi, double& err);

}  // namespace quad
}  // namespace shear
