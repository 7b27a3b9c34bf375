#pragma once

#include "heis/exact_rational.hpp"
#include "heis/monodromy.hpp"

#include <optional>
#include <vector>

namespace heis {

/// Real evaluation grid for the deviation sup; the coarse pass is refined
/// tenfold around the argmax.
struct GridSpec {
    double lo = -10.0;
    double hi = 10.0;
    int points = 2001;
    int refinement = 10;
};

enum class ChargeBackend { kAuto, kExact, kNumeric };

/// Closed-form conjectured charge (1/4pi) jj / (mu^2 + (jj+1)^2/4).
Complex x_infinity(RepIndex jj, Complex mu);

/// Large-mu approximation depending on the state only through r = n2/n1;
/// continuous at r = 1 where it reduces to x_infinity (series branch).
Complex x_tilde(RepIndex jj, Complex mu, double r);

/// Exact 1/mu^2 coefficient of x_tilde times pi, as a rational in r.
Rational x_tilde_leading(RepIndex jj, const Rational& r);

/// |x_tilde(r) - x_tilde(1/r)|.
double r_inversion_check(RepIndex jj, Complex mu, double r);

/// Residual of the small-eps series of x_tilde at r = 1 - eps:
///   |x_tilde(1-eps) - x_infinity (1 - (jj+2) eps^2 / 12)| = O(eps^3).
double epsilon_expansion_check(RepIndex jj, Complex mu, double eps);

struct DeviationReport {
    double delta = 0.0;
    double argmax_mu = 0.0;
    std::vector<double> excluded;  // grid points where evaluation failed
};

/// Sup over the grid of |(X - x_tilde)/X| with one tenfold refinement pass
/// around the coarse argmax.  Backend kAuto uses the exact charge for
/// M <= 60 and the numeric pipeline above.
DeviationReport deviation(const SpinState& psi, RepIndex jj, const GridSpec& grid = {},
                          ChargeBackend backend = ChargeBackend::kAuto);

struct CurvePoint {
    double mu;
    double x;
    double x_tilde;
    double x_infinity;
    double rel_deviation;
};

/// Row data for curve exports (mu, X, x_tilde, x_infinity, relative deviation).
std::vector<CurvePoint> deviation_curve(const SpinState& psi, RepIndex jj,
                                        const GridSpec& grid = {},
                                        ChargeBackend backend = ChargeBackend::kAuto);

/// Adaptive quadrature of (c/2pi^2) Int da / ((4a^2+1)(a^2+(mu-a)^2+1/2));
/// equals c/(4 pi (mu^2+1)).
double thermo_integral(double mu, double c = 1.0);

} // namespace heis
