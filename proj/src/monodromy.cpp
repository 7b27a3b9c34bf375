#include "heis/monodromy.hpp"

#include "heis/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <numbers>

namespace heis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::MatrixXcd site_block(const TopSectorBlocks& tb, int channel, Complex f, Complex mu,
                            Complex x) {
    return f * tb.num_diag[channel - 1].eval(mu, x);
}

}  // namespace

Eigen::MatrixXcd monodromy_general(const SpinState& psi, RepIndex jj, Complex mu, Complex x) {
    const TopSectorBlocks& tb = top_sector_blocks(jj);
    const Complex f = norm_factor(jj, SpectralPoint(mu, x));
    const int n = jj.dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    for (int site : psi.sites) m = site_block(tb, site, f, mu, x) * m;
    return m;
}

Eigen::MatrixXcd monodromy(const SpinState& psi, RepIndex jj, Complex mu) {
    return monodromy_general(psi, jj, mu, mu);
}

Eigen::MatrixXcd monodromy_derivative(const SpinState& psi, RepIndex jj, Complex mu) {
    const TopSectorBlocks& tb = top_sector_blocks(jj);
    const Complex f = norm_factor(jj, SpectralPoint(mu));
    const Complex fdx = norm_factor_dx(jj, mu);
    const int n = jj.dim();
    const int m = psi.length();

    // Normalized blocks and their x-derivatives per site.
    std::vector<Eigen::MatrixXcd> blocks(m), dblocks(m);
    Eigen::MatrixXcd cache_block[2], cache_dblock[2];
    bool have[2] = {false, false};
    for (int k = 0; k < m; ++k) {
        const int ch = psi.sites[k];
        if (!have[ch - 1]) {
            const auto& s = tb.num_diag[ch - 1];
            cache_block[ch - 1] = f * s.eval(mu, mu);
            cache_dblock[ch - 1] = f * s.eval_dx(mu, mu) + fdx * s.eval(mu, mu);
            have[ch - 1] = true;
        }
        blocks[k] = cache_block[ch - 1];
        dblocks[k] = cache_dblock[ch - 1];
    }

    // Prefix products P_k = L_k ... L_1 and suffix products S_k = L_M ... L_{k+1}.
    std::vector<Eigen::MatrixXcd> prefix(m + 1), suffix(m + 1);
    prefix[0] = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 0; k < m; ++k) prefix[k + 1] = blocks[k] * prefix[k];
    suffix[m] = Eigen::MatrixXcd::Identity(n, n);
    for (int k = m; k-- > 0;) suffix[k] = suffix[k + 1] * blocks[k];

    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < m; ++k) d += suffix[k + 1] * dblocks[k] * prefix[k];
    return d;
}

Eigen::VectorXcd unit_right_eigenvector(const Eigen::MatrixXcd& m) {
    const Eigen::Index n = m.rows();
    const double scale = m.norm();
    Eigen::MatrixXcd a = m - Eigen::MatrixXcd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (n >= 2 && sv(n - 2) <= 1e-8 * scale)
        throw DegenerateEigenvalueError(
            "unit_right_eigenvector: eigenvalue-1 eigenspace is not one dimensional");

    // Jordan proximity: a second eigenvalue collapsing onto 1 signals a pole.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    int near_one = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-5) ++near_one;
    if (near_one >= 2)
        throw DegenerateEigenvalueError(
            "unit_right_eigenvector: unit eigenvalue is Jordan-degenerate (pole proximity)");

    Eigen::VectorXcd v = svd.matrixV().col(n - 1);
    // Deterministic phase: first significant component real positive.
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(v(i)) > 1e-12) {
            v *= std::conj(v(i)) / std::abs(v(i));
            break;
        }
    }
    return v;
}

MonodromyData monodromy_data(const SpinState& psi, RepIndex jj, Complex mu) {
    MonodromyData md;
    md.matrix = monodromy(psi, jj, mu);
    md.derivative = monodromy_derivative(psi, jj, mu);
    md.v = unit_right_eigenvector(md.matrix);
    const Eigen::VectorXi wi = w_vector(jj);
    md.w = wi.cast<Complex>();
    const Complex wv = md.w.dot(md.v);  // conjugates w; w is real
    if (std::abs(wv) < 1e-10 * md.w.norm() * md.v.norm())
        throw PoleProximityError("charge: w.v vanishes (evaluation at or near a pole)");
    md.delta = md.w.dot(md.derivative * md.v) / wv;
    return md;
}

Complex charge_numeric(const SpinState& psi, RepIndex jj, Complex mu) {
    MonodromyData md;
    try {
        md = monodromy_data(psi, jj, mu);
    } catch (const DegenerateEigenvalueError& e) {
        throw PoleProximityError(e.what());
    }
    return md.delta / (Complex(0.0, kTwoPi) * static_cast<double>(psi.length()));
}

Complex power_limit_oracle(const SpinState& psi, RepIndex jj, Complex mu, long long n_over_m) {
    if (n_over_m < 1) throw Error("power_limit_oracle: n_over_m must be >= 1");
    const double n_total = static_cast<double>(n_over_m) * psi.length();
    const double h = 1e-6 * std::max(1.0, std::abs(mu));
    auto trace_power = [&](Complex x) {
        Eigen::MatrixXcd m = monodromy_general(psi, jj, mu, x);
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
        long long e = n_over_m;
        while (e) {
            if (e & 1ll) acc = acc * m;
            e >>= 1ll;
            if (e) m = m * m;
        }
        return acc.trace();
    };
    const Complex dtr = (trace_power(mu + h) - trace_power(mu - h)) / (2.0 * h);
    return dtr / (Complex(0.0, kTwoPi) * n_total);
}

} // namespace heis
