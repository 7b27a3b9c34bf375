#pragma once

#include "heis/eigen_support.hpp"
#include "heis/spin_algebra.hpp"

#include <complex>

namespace heis {

using Complex = std::complex<double>;

/// Evaluation point of the two-channel blocks.
struct SpectralPoint {
    Complex mu;
    Complex x;
    SpectralPoint(Complex m, Complex xx) : mu(m), x(xx) {}
    explicit SpectralPoint(Complex m) : mu(m), x(m) {}
};

/// Bilinear decomposition of one bare (normalization factored out) block:
///   B(mu,x) = cc + mu*cm + x*cx + mu*x*cmx
/// with exact Gaussian-rational entries.  This single structure feeds both
/// the exact-symbolic and the complex-numeric backends.
struct BlockStructure {
    GaussMatrix cc, cm, cx, cmx;

    Eigen::Index dim() const { return cc.rows(); }

    GaussMatrix eval_exact(const GaussRational& mu, const GaussRational& x) const;
    /// Bare block as polynomial matrix in mu at x = mu (degree <= 2).
    GaussPolyMatrix poly_at_diagonal() const;
    /// (d/dx B)(mu, x)|_{x=mu} as polynomial matrix in mu (degree <= 1).
    GaussPolyMatrix poly_dx_at_diagonal() const;

    /// Restriction to a sector (same index set for rows and columns).
    BlockStructure restricted(const std::vector<int>& idx) const;
};

/// Complex-double cache of a BlockStructure for grid evaluation.
struct BlockStructureNum {
    Eigen::MatrixXcd cc, cm, cx, cmx;

    explicit BlockStructureNum(const BlockStructure& s);
    BlockStructureNum() = default;

    Eigen::MatrixXcd eval(Complex mu, Complex x) const { return cc + mu * cm + x * cx + (mu * x) * cmx; }
    Eigen::MatrixXcd eval_dx(Complex mu, Complex x) const {
        (void)x;
        return cx + mu * cmx;
    }
};

/// The four bare blocks on the full product space V_jj (x) V_jj.
struct LaxStructure {
    RepIndex jj;
    BlockStructure b11, b22, b12, b21;

    const BlockStructure& diagonal(int channel) const;  // channel 1 or 2
    const BlockStructure& offdiagonal(int from, int to) const;
};

LaxStructure build_lax_structure(RepIndex jj);

/// Normalization factor 1/[(mu - i(jj+1)/2)(x + i(jj+1)/2)].
Complex norm_factor(RepIndex jj, const SpectralPoint& p);
GaussRational norm_factor_exact(RepIndex jj, const GaussRational& mu, const GaussRational& x);
/// d/dx of the normalization at x = mu: -f(mu,mu)/(mu + i(jj+1)/2).
Complex norm_factor_dx(RepIndex jj, Complex mu);

/// The four blocks evaluated numerically on the full space.
struct LaxBlocks {
    RepIndex jj;
    bool normalized;
    Eigen::MatrixXcd b11, b22, b12, b21;

    const Eigen::MatrixXcd& block(int from, int to) const;
};

LaxBlocks lax_blocks(RepIndex jj, const SpectralPoint& p);
/// Same with the normalization factor left out.
LaxBlocks lax_blocks_bare(RepIndex jj, const SpectralPoint& p);
/// Entrywise d/dx of the normalized blocks at x = mu.
LaxBlocks lax_block_derivative(RepIndex jj, Complex mu);

/// Exact blocks at a Gaussian-rational point.
struct ExactLaxBlocks {
    RepIndex jj;
    bool normalized;
    GaussMatrix b11, b22, b12, b21;

    const GaussMatrix& block(int from, int to) const;
};

ExactLaxBlocks lax_blocks_exact(RepIndex jj, const GaussRational& mu, const GaussRational& x,
                                bool normalized = true);

/// Cached per-representation data for the charge pipelines: bare diagonal
/// blocks restricted to the top sector, exact and complex.
struct TopSectorBlocks {
    RepIndex jj;
    SectorBasis basis;
    BlockStructure diag[2];         // channels 1,2; bare, exact
    BlockStructureNum num_diag[2];  // complex cache of the same
};

/// Shared, lazily built cache (thread safe); index by jj.
const TopSectorBlocks& top_sector_blocks(RepIndex jj);

} // namespace heis
