#pragma once

#include "heis/eigen_support.hpp"
#include "heis/rational.hpp"

#include <utility>
#include <vector>

namespace heis {

/// Representation index jj = 2s >= 1; the module V_jj has dimension jj+1.
struct RepIndex {
    int jj;
    explicit RepIndex(int j);
    int dim() const { return jj + 1; }
};

/// Exact su(2) generators on V_jj, basis e_0..e_jj (e_0 highest weight):
///   sz e_k = (jj/2 - k) e_k
///   sp e_k = e_{k-1}
///   sm e_k = (k+1)(jj-k) e_{k+1}
/// Rational (square-root-free) normalization; the index directions are the
/// ones under which the canonical left eigenvector relations hold.
struct SpinOperators {
    RepIndex jj;
    RationalMatrix sz, sp, sm;
};

SpinOperators build_spin_ops(RepIndex jj);

/// Basis of one total-S^z eigenspace of V_jj (x) V_jj.  Pairs (k,l) index
/// e_k (x) e_l; the sector label c = k+l runs 0..2jj and the physical
/// S^z eigenvalue is jj - c (so the top sector c = jj has S^z = 0).
struct SectorBasis {
    RepIndex jj;
    Rational sz_total;
    std::vector<std::pair<int, int>> indices;

    /// Flat indices into the (jj+1)^2-dimensional product space.
    std::vector<int> flat_indices() const {
        std::vector<int> out;
        out.reserve(indices.size());
        for (auto [k, l] : indices) out.push_back(k * (jj.jj + 1) + l);
        return out;
    }
};

/// The dominant sector W(jj,jj): pairs (k, jj-k), k ascending, dimension jj+1.
SectorBasis top_sector(RepIndex jj);

/// All sectors, c = 0..2jj.
SectorBasis sector_basis(RepIndex jj, int c);

/// Canonical left unit eigenvector on the top sector: component (-1)^k at
/// (k, jj-k).
Eigen::VectorXi w_vector(RepIndex jj);

} // namespace heis
