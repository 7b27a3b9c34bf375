#include "heis/poles.hpp"

#include "heis/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace heis {

namespace {

using CLD = std::complex<long double>;

std::vector<CLD> to_cld_coeffs(const QPoly& p) {
    std::vector<CLD> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c.to_long_double(), 0.0L);
    return out;
}

CLD horner_cld(const std::vector<CLD>& c, CLD z) {
    CLD acc(0.0L, 0.0L);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

std::vector<CLD> derivative_cld(const std::vector<CLD>& c) {
    std::vector<CLD> d;
    if (c.size() <= 1) return d;
    d.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<long double>(k);
    return d;
}

}  // namespace

std::vector<CLD> aberth_roots(const std::vector<CLD>& coeffs_in) {
    std::vector<CLD> c = coeffs_in;
    while (!c.empty() && std::abs(c.back()) == 0.0L) c.pop_back();
    if (c.size() <= 1) return {};
    const int deg = static_cast<int>(c.size()) - 1;
    // scale to monic-ish magnitudes
    for (auto& v : c) v /= coeffs_in.back();

    std::vector<CLD> d = derivative_cld(c);
    // Cauchy-style initial radius and staggered angles.
    long double radius = 0.0L;
    for (int k = 0; k < deg; ++k)
        radius = std::max(radius, std::pow(std::abs(c[k]), 1.0L / (deg - k)));
    radius = 1.0L + radius;
    std::vector<CLD> z(deg);
    for (int i = 0; i < deg; ++i) {
        const long double th =
            2.0L * std::numbers::pi_v<long double> * i / deg + 0.4L;
        z[i] = radius * CLD(std::cos(th), std::sin(th));
    }

    for (int sweep = 0; sweep < 200; ++sweep) {
        long double worst = 0.0L;
        for (int i = 0; i < deg; ++i) {
            const CLD p = horner_cld(c, z[i]);
            const CLD dp = horner_cld(d, z[i]);
            if (std::abs(p) == 0.0L) continue;
            CLD newton = (std::abs(dp) == 0.0L) ? CLD(1e-3L, 1e-3L) : p / dp;
            CLD sum(0.0L, 0.0L);
            for (int j = 0; j < deg; ++j)
                if (j != i) sum += CLD(1.0L, 0.0L) / (z[i] - z[j]);
            const CLD denom = CLD(1.0L, 0.0L) - newton * sum;
            const CLD corr = (std::abs(denom) == 0.0L) ? newton : newton / denom;
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0L + std::abs(z[i])));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

PoleSet find_poles(const RationalCharge& rc) {
    if (rc.denominator.degree() < 1)
        throw Error("find_poles: denominator has no roots (degree < 1)");
    PoleSet ps;
    ps.jj = rc.jj;
    ps.psi_len = rc.psi_len;

    // roots of the even denominator via t = mu^2
    const QPoly tden = rc.denominator.even_part_in_square();
    std::vector<CLD> troots = aberth_roots(to_cld_coeffs(tden));

    // cluster in t (relative 1e-7) to recover multiplicities
    std::vector<bool> used(troots.size(), false);
    std::vector<std::pair<CLD, int>> clusters;
    for (size_t i = 0; i < troots.size(); ++i) {
        if (used[i]) continue;
        CLD sum = troots[i];
        int count = 1;
        used[i] = true;
        for (size_t j = i + 1; j < troots.size(); ++j) {
            if (used[j]) continue;
            const long double scale = std::max<long double>(std::abs(troots[i]), 1.0L);
            if (std::abs(troots[j] - troots[i]) <= 1e-7L * scale) {
                sum += troots[j];
                ++count;
                used[j] = true;
            }
        }
        clusters.emplace_back(sum / static_cast<long double>(count), count);
    }

    // polish mu = +-sqrt(t) on the full denominator and collect
    const std::vector<CLD> dc = to_cld_coeffs(rc.denominator);
    const std::vector<CLD> ddc = derivative_cld(dc);
    long double worst_rel = 0.0L;
    for (auto [t, mult] : clusters) {
        CLD mu = std::sqrt(t);
        for (CLD root : {mu, -mu}) {
            for (int it = 0; it < 60; ++it) {
                const CLD p = horner_cld(dc, root);
                const CLD dp = horner_cld(ddc, root);
                if (std::abs(dp) == 0.0L) break;
                const CLD step = p / dp;
                root -= step;
                if (std::abs(step) <= 1e-19L * (1.0L + std::abs(root))) break;
            }
            // backward-error residual at the polished root
            long double scale = 0.0L, zp = 1.0L;
            const long double az = std::abs(root);
            for (const auto& ck : dc) {
                scale += std::abs(ck) * zp;
                zp *= az;
            }
            worst_rel = std::max(worst_rel, std::abs(horner_cld(dc, root)) / scale);
            ps.roots.push_back(Complex(static_cast<double>(root.real()),
                                       static_cast<double>(root.imag())));
            ps.multiplicities.push_back(mult);
        }
    }
    ps.residual = static_cast<double>(worst_rel);
    if (ps.residual > 1e-10)
        throw RootFindingError("find_poles: root polishing stalled, residual " +
                               std::to_string(ps.residual));
    return ps;
}

PhysicalStripReport classify_physical_strip(const PoleSet& ps) {
    PhysicalStripReport out;
    out.min_imag_abs = std::numeric_limits<double>::infinity();
    for (const Complex& r : ps.roots) {
        out.min_imag_abs = std::min(out.min_imag_abs, std::abs(r.imag()));
        if (std::abs(r.imag()) < 0.5 - 1e-9) out.inside.push_back(r);
    }
    return out;
}

double hyperbola_check(const PoleSet& ps) {
    if (ps.jj != 1)
        throw WrongRepresentationError("hyperbola_check: defined for jj = 1 only");
    double worst = 0.0;
    for (const Complex& r : ps.roots)
        worst = std::max(worst,
                         std::abs(r.imag() * r.imag() - r.real() * r.real() - 0.5));
    return worst;
}

CurveSolutions curve_solutions(int m) {
    if (m < 2) throw Error("curve_solutions: M must be >= 2");
    CurveSolutions cs;
    cs.m = m;
    for (int k = 1; k < m; ++k) {
        const long double th = std::numbers::pi_v<long double> * k / m;
        const long double y = std::cos(th) / std::sin(th) / 2.0L;
        const CLD musq(-0.5L, y);
        const CLD mu = std::sqrt(musq);
        cs.k.push_back(k);
        cs.mu_sq.push_back(Complex(static_cast<double>(musq.real()),
                                   static_cast<double>(musq.imag())));
        cs.mu.push_back(Complex(static_cast<double>(mu.real()),
                                static_cast<double>(mu.imag())));
    }
    return cs;
}

JordanReport jordan_check(const SpinState& psi, RepIndex jj, Complex pole) {
    JordanReport rep;
    rep.pole = pole;
    const Eigen::MatrixXcd m = monodromy(psi, jj, pole);
    const Eigen::Index n = m.rows();

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-4) ++rep.unit_eigenvalue_count;

    // Null-space thresholds: 1e-8 * (1 + sigma_max) of the matrix being
    // tested.  The additive 1 keeps the test meaningful when the matrix
    // vanishes identically ((M - I)^2 does at jj=1 poles), and tying the
    // scale to each matrix keeps an O(1) genuine singular value from being
    // swallowed when the monodromy itself is huge.
    const Eigen::MatrixXcd a = m - Eigen::MatrixXcd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    for (Eigen::Index i = 0; i < n; ++i)
        if (sv(i) <= 1e-8 * (1.0 + sv(0))) ++rep.kernel_dim;

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd2((a * a).eval());
    const auto& sv2 = svd2.singularValues();
    for (Eigen::Index i = 0; i < n; ++i)
        if (sv2(i) <= 1e-8 * (1.0 + sv2(0))) ++rep.kernel_dim_sq;

    const Eigen::VectorXcd v = svd.matrixV().col(n - 1);
    const Eigen::VectorXcd w = w_vector(jj).cast<Complex>();
    rep.wv_abs = std::abs(w.dot(v)) / (w.norm() * v.norm());

    if (rep.unit_eigenvalue_count < 2 || rep.kernel_dim != 1 ||
        rep.kernel_dim_sq - rep.kernel_dim != 1)
        throw PoleMismatchError("jordan_check: no 2-dim Jordan block at the given point");
    return rep;
}

double analytic_pole_cdf(double a) { return 0.5 + std::atan(2.0 * a) / std::numbers::pi; }

PoleDensityReport pole_density_compare(int m) {
    if (m < 2) throw Error("pole_density_compare: M must be >= 2");
    const CurveSolutions cs = curve_solutions(m);
    PoleDensityReport rep;

    auto sup_distance = [](std::vector<double> xs, auto cdf) {
        std::sort(xs.begin(), xs.end());
        const double n = static_cast<double>(xs.size());
        double sup = 0.0;
        for (size_t i = 0; i < xs.size(); ++i) {
            const double f = cdf(xs[i]);
            sup = std::max(sup, std::abs((static_cast<double>(i) + 1.0) / n - f));
            sup = std::max(sup, std::abs(static_cast<double>(i) / n - f));
        }
        return sup;
    };

    // exact law: y = Im(mu^2) is a Cauchy sample on the uniform k-grid
    std::vector<double> ys;
    ys.reserve(cs.mu_sq.size());
    for (const Complex& t : cs.mu_sq) ys.push_back(t.imag());
    rep.sup_distance_curve = sup_distance(ys, [](double y) { return analytic_pole_cdf(y); });

    // literal Re(mu) mapping, both signs (reference diagnostic)
    for (const Complex& mu : cs.mu) {
        rep.a_values.push_back(mu.real());
        rep.a_values.push_back(-mu.real());
    }
    rep.sup_distance_re =
        sup_distance(rep.a_values, [](double a) { return analytic_pole_cdf(a); });
    return rep;
}

Complex residue_at(const RationalCharge& rc, Complex pole) {
    const std::vector<CLD> num = to_cld_coeffs(rc.numerator);
    const std::vector<CLD> den = to_cld_coeffs(rc.denominator);
    const std::vector<CLD> dden = derivative_cld(den);
    const CLD z(pole.real(), pole.imag());
    const CLD r = horner_cld(num, z) / horner_cld(dden, z) *
                  CLD(rc.prefactor.to_long_double() / std::numbers::pi_v<long double>, 0.0L);
    return Complex(static_cast<double>(r.real()), static_cast<double>(r.imag()));
}

} // namespace heis
