#pragma once

#include "heis/eigen_support.hpp"
#include "heis/spin_algebra.hpp"
#include "heis/state.hpp"
#include "heis/zpoly.hpp"

#include <complex>
#include <string>

namespace heis {

/// X_jj(mu) * pi as an exact reduced rational function:
///   X(mu) = (prefactor / pi) * numerator(mu) / denominator(mu)
/// Numerator and denominator are primitive integer polynomials, even in mu,
/// with positive leading coefficients; the sign lives in the prefactor.
struct RationalCharge {
    int jj = 1;
    int psi_len = 0;
    Rational prefactor;
    QPoly numerator;
    QPoly denominator{Rational(1)};

    bool is_zero() const { return numerator.is_zero(); }

    /// Full value including the 1/pi.
    long double eval_real(long double mu) const;
    std::complex<long double> eval(std::complex<long double> mu) const;
    std::complex<double> eval(std::complex<double> mu) const;

    std::string to_json() const;
    static RationalCharge from_json(const std::string& text);
};

/// Fraction-free (Bareiss) determinant of a polynomial matrix.
QPoly poly_matrix_det(QPolyMatrix a);
GaussPoly poly_matrix_det(GaussPolyMatrix a);

/// A nonzero column of Adj(m - I) for the rational-function matrix
/// m = m_num / m_den (entrywise), cleared of common polynomial factors.
/// Verifies det(m - I) == 0 identically and (m - I) v == 0.
/// Throws AdjugateRankError when every column vanishes.
GaussPolyVector adjugate_unit_vector(const GaussPolyMatrix& m_num,
                                     const GaussPoly& m_den = GaussPoly(GaussRational(1)));

/// Exact charge of a simple substate, reduced over the integers.
/// degree_cap bounds the reduced denominator degree estimate 2*jj*M.
RationalCharge charge_exact(const SpinState& psi, RepIndex jj, int degree_cap = 600);

/// Coefficient of mu^-2 in the large-mu expansion, divided by pi
/// (i.e. prefactor * lead(num)/lead(den)); requires degree gap 2.
Rational leading_coefficient(const RationalCharge& rc);

} // namespace heis
