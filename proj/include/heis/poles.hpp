#pragma once

#include "heis/exact_rational.hpp"
#include "heis/monodromy.hpp"

#include <complex>
#include <vector>

namespace heis {

/// Complex roots of a charge denominator with multiplicities.
struct PoleSet {
    int jj = 1;
    int psi_len = 0;
    std::vector<Complex> roots;
    std::vector<int> multiplicities;
    /// max over roots of |den(root)| / sum_k |c_k| |root|^k after polishing.
    double residual = 0.0;
};

struct PhysicalStripReport {
    std::vector<Complex> inside;  // roots with |Im| < 1/2 - margin
    double min_imag_abs = 0.0;
};

/// Solutions of (mu^2/(mu^2+1))^M = 1, k = 1..M-1:
///   mu_k^2 = (i/2) cot(pi k / M) - 1/2.
struct CurveSolutions {
    int m = 0;
    std::vector<int> k;
    std::vector<Complex> mu_sq;
    std::vector<Complex> mu;  // principal roots; negatives are implied
};

struct JordanReport {
    Complex pole;
    int unit_eigenvalue_count = 0;  // eigenvalues within cluster tolerance of 1
    int kernel_dim = 0;             // dim ker (M - I)
    int kernel_dim_sq = 0;          // dim ker (M - I)^2
    double wv_abs = 0.0;            // |w.v| / (|w||v|)
};

/// Empirical pole-distribution comparison against the arctan law.
/// The exact statement lives in the curve variable y = Im(mu^2): uniform
/// k/M maps to y = cot(pi k/M)/2, a Cauchy sample whose CDF is exactly
/// 1/2 + atan(2y)/pi.  sup_distance_curve measures that; sup_distance_re
/// is the same statistic for a = Re(mu), where the law only holds up to a
/// sqrt(2a^2+1) reweighting (reported for reference).
struct PoleDensityReport {
    std::vector<double> a_values;   // Re(mu), both signs
    double sup_distance_curve = 0.0;
    double sup_distance_re = 0.0;
};

/// Aberth-Ehrlich simultaneous root finding; ascending complex coefficients.
std::vector<std::complex<long double>> aberth_roots(
    const std::vector<std::complex<long double>>& coeffs);

PoleSet find_poles(const RationalCharge& rc);

PhysicalStripReport classify_physical_strip(const PoleSet& ps);

/// max |Im(mu)^2 - Re(mu)^2 - 1/2| over the poles; jj = 1 only.
double hyperbola_check(const PoleSet& ps);

CurveSolutions curve_solutions(int m);

/// Eigenstructure of the monodromy at a pole: confirms the 2-dim Jordan
/// block (geometric multiplicity 1, rank-1 defect jump) and w.v ~ 0.
/// Throws PoleMismatchError when the defect is absent.
JordanReport jordan_check(const SpinState& psi, RepIndex jj, Complex pole);

PoleDensityReport pole_density_compare(int m);

/// CDF of the normalized density 1/(4a^2+1): 1/2 + atan(2a)/pi.
double analytic_pole_cdf(double a);

/// Numeric residue lim (mu - pole) X(mu) at a simple pole (diagnostic).
Complex residue_at(const RationalCharge& rc, Complex pole);

} // namespace heis
