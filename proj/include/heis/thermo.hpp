#pragma once

#include "heis/eigen_support.hpp"
#include "heis/lax.hpp"
#include "heis/spin_algebra.hpp"

#include <complex>
#include <vector>

namespace heis {

/// Quadratic Casimir sm (x) sp + sp (x) sm + 2 sz (x) sz on V_jj (x) V_jj,
/// with its exact spectrum: eigenvalue s(s+1) - jj(jj+2)/2 on the spin-s
/// submodule (s = 0..jj, multiplicity 2s+1).
struct CasimirSpec {
    RepIndex jj;
    RationalMatrix op;
    std::vector<std::pair<Rational, int>> spectrum;  // (eigenvalue, multiplicity)
};

CasimirSpec casimir(RepIndex jj);

/// Eigenvalue of (1/2) tr_q L on the spin-(r/2) submodule:
///   ((jj+1)^2 - r(r/2+1) + 2i(mu-x) + 4 mu x) / ((2mu - i(jj+1))(2x + i(jj+1)))
/// Only even r = 2s, s = 0..jj, occur in the product-space trace, each with
/// multiplicity r+1.
Complex lambda_r(RepIndex jj, int rlabel, Complex mu, Complex x);

/// T -> infinity Gibbs average (1/pi) jj / ((jj+1)^2 + 4 mu^2).
double gibbs_average(RepIndex jj, double mu);

/// Finite-N average (1/2 pi i N) d/dx [sum_s (2s+1) lambda_{2s}^N] at x=mu,
/// the derivative taken by central differences.
double gibbs_average_finite(RepIndex jj, double mu, long long n);

struct DensityPair {
    double rho;
    double rho_bar;
    double eta;
};

/// String and hole densities from the shifted conjectured charges,
/// X_0 == 0 convention.
DensityPair string_densities(RepIndex jj, double mu);

/// Closed forms rho = (1/2pi) 8/((4mu^2+jj^2)(4mu^2+(jj+2)^2)),
/// rho_bar = jj(jj+2) rho.
DensityPair string_densities_closed(RepIndex jj, double mu);

/// Max residual |eta_j^2 - (1+eta_{j+1})(1+eta_{j-1})| over j = 1..jj_max,
/// eta_j = j(j+2), computed in exact integers.
long long y_system_check(int jj_max);

} // namespace heis
