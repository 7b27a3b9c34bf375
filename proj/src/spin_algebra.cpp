#include "heis/spin_algebra.hpp"

#include "heis/errors.hpp"

namespace heis {

RepIndex::RepIndex(int j) : jj(j) {
    if (j < 1) throw Error("RepIndex: jj must be >= 1");
}

SpinOperators build_spin_ops(RepIndex jj) {
    const int n = jj.dim();
    RationalMatrix sz = RationalMatrix::Constant(n, n, Rational(0));
    RationalMatrix sp = RationalMatrix::Constant(n, n, Rational(0));
    RationalMatrix sm = RationalMatrix::Constant(n, n, Rational(0));
    for (int k = 0; k < n; ++k) {
        sz(k, k) = Rational(jj.jj - 2 * k, 2);
        if (k >= 1) sp(k - 1, k) = Rational(1);
        if (k + 1 < n) sm(k + 1, k) = Rational(static_cast<long long>(k + 1) * (jj.jj - k));
    }
    return SpinOperators{jj, std::move(sz), std::move(sp), std::move(sm)};
}

SectorBasis sector_basis(RepIndex jj, int c) {
    if (c < 0 || c > 2 * jj.jj) throw Error("sector_basis: label out of range");
    SectorBasis sb{jj, Rational(jj.jj - c), {}};
    for (int k = 0; k <= jj.jj; ++k) {
        int l = c - k;
        if (l >= 0 && l <= jj.jj) sb.indices.emplace_back(k, l);
    }
    return sb;
}

SectorBasis top_sector(RepIndex jj) { return sector_basis(jj, jj.jj); }

Eigen::VectorXi w_vector(RepIndex jj) {
    Eigen::VectorXi w(jj.dim());
    for (int k = 0; k <= jj.jj; ++k) w(k) = (k % 2 == 0) ? 1 : -1;
    return w;
}

} // namespace heis
