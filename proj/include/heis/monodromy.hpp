#pragma once

#include "heis/lax.hpp"
#include "heis/state.hpp"

#include <complex>

namespace heis {

/// Top-sector monodromy at x = mu together with its x-derivative, the unit
/// eigenvectors and the eigenvalue slope delta.
struct MonodromyData {
    Eigen::MatrixXcd matrix;
    Eigen::MatrixXcd derivative;
    Eigen::VectorXcd v;
    Eigen::VectorXcd w;
    Complex delta;
};

/// Product of the site-diagonal normalized blocks over psi, restricted to
/// the top sector; rightmost factor is site 1.
Eigen::MatrixXcd monodromy(const SpinState& psi, RepIndex jj, Complex mu);

/// Same at independent (mu, x); used by derivative oracles and the power
/// limit.
Eigen::MatrixXcd monodromy_general(const SpinState& psi, RepIndex jj, Complex mu, Complex x);

/// Leibniz d/dx of the monodromy at x = mu.
Eigen::MatrixXcd monodromy_derivative(const SpinState& psi, RepIndex jj, Complex mu);

/// Null direction of (m - I): right singular vector of the smallest singular
/// value, unit norm, first significant component rotated real positive.
/// Raises DegenerateEigenvalueError when the eigenvalue-1 eigenspace is not
/// one dimensional or a nearby Jordan chain makes the problem degenerate.
Eigen::VectorXcd unit_right_eigenvector(const Eigen::MatrixXcd& m);

MonodromyData monodromy_data(const SpinState& psi, RepIndex jj, Complex mu);

/// X_jj(mu) = delta / (2 pi i M).
Complex charge_numeric(const SpinState& psi, RepIndex jj, Complex mu);

/// Finite-power oracle (1/2 pi i N) d/dx tr[(M(mu,x))^{N/M}] at x=mu with
/// N = n_over_m * M, the derivative taken by central differences.
Complex power_limit_oracle(const SpinState& psi, RepIndex jj, Complex mu, long long n_over_m);

} // namespace heis
