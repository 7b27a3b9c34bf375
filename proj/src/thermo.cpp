#include "heis/thermo.hpp"

#include "heis/conjecture.hpp"
#include "heis/errors.hpp"

#include <cmath>
#include <numbers>

namespace heis {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

CasimirSpec casimir(RepIndex jj) {
    const SpinOperators ops = build_spin_ops(jj);
    const int n = jj.dim();
    RationalMatrix op(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    op(a * n + b, c * n + d) = ops.sm(a, c) * ops.sp(b, d) +
                                               ops.sp(a, c) * ops.sm(b, d) +
                                               Rational(2) * ops.sz(a, c) * ops.sz(b, d);
    CasimirSpec spec{jj, std::move(op), {}};
    for (int s = 0; s <= jj.jj; ++s)
        spec.spectrum.emplace_back(
            Rational(s) * Rational(s + 1) - Rational(jj.jj) * Rational(jj.jj + 2) * Rational(1, 2),
            2 * s + 1);
    return spec;
}

Complex lambda_r(RepIndex jj, int rlabel, Complex mu, Complex x) {
    if (rlabel < 0 || rlabel > 2 * jj.jj)
        throw Error("lambda_r: rlabel out of range 0..2jj");
    const double j1 = jj.jj + 1;
    const Complex den = (2.0 * mu - Complex(0.0, j1)) * (2.0 * x + Complex(0.0, j1));
    if (std::abs(den) < 1e-100) throw SingularPointError("lambda_r: singular denominator");
    const Complex num = j1 * j1 - rlabel * (0.5 * rlabel + 1.0) +
                        2.0 * Complex(0.0, 1.0) * (mu - x) + 4.0 * mu * x;
    return num / den;
}

double gibbs_average(RepIndex jj, double mu) {
    const double j1 = jj.jj + 1;
    return jj.jj / (kPi * (j1 * j1 + 4.0 * mu * mu));
}

double gibbs_average_finite(RepIndex jj, double mu, long long n) {
    if (n < 1) throw Error("gibbs_average_finite: N must be >= 1");
    // step shrinks with N so the finite-difference truncation, which grows
    // like h^2 N^2, stays below the 1/N convergence being measured
    const double h = 1e-4 / static_cast<double>(n) * std::max(1.0, std::abs(mu));
    auto trace_pow = [&](double x) {
        Complex acc(0.0, 0.0);
        for (int s = 0; s <= jj.jj; ++s) {
            const Complex lam = lambda_r(jj, 2 * s, Complex(mu, 0.0), Complex(x, 0.0));
            acc += static_cast<double>(2 * s + 1) * std::pow(lam, static_cast<double>(n));
        }
        return acc;
    };
    const Complex dtr = (trace_pow(mu + h) - trace_pow(mu - h)) / (2.0 * h);
    const Complex value = dtr / (Complex(0.0, 2.0 * kPi) * static_cast<double>(n));
    return value.real();
}

DensityPair string_densities(RepIndex jj, double mu) {
    const int j = jj.jj;
    auto xinf = [&](int jlabel, Complex z) -> Complex {
        if (jlabel == 0) return Complex(0.0, 0.0);  // X_0 == 0 convention
        return x_infinity(RepIndex(jlabel), z);
    };
    const Complex up(mu, 0.5), dn(mu, -0.5), at(mu, 0.0);
    const Complex shifted = xinf(j, up) + xinf(j, dn);
    const Complex rho_c = shifted - xinf(j - 1, at) - xinf(j + 1, at);
    const double bare = 4.0 * j / (2.0 * kPi * (j * j + 4.0 * mu * mu));
    const Complex rho_bar_c = bare - shifted;
    DensityPair out{rho_c.real(), rho_bar_c.real(), 0.0};
    out.eta = out.rho_bar / out.rho;
    return out;
}

DensityPair string_densities_closed(RepIndex jj, double mu) {
    const int j = jj.jj;
    const double rho =
        8.0 / (2.0 * kPi * (4.0 * mu * mu + j * j) * (4.0 * mu * mu + (j + 2.0) * (j + 2.0)));
    return DensityPair{rho, j * (j + 2.0) * rho, static_cast<double>(j) * (j + 2.0)};
}

long long y_system_check(int jj_max) {
    if (jj_max < 1) throw Error("y_system_check: jj_max must be >= 1");
    auto eta = [](long long j) { return j * (j + 2); };
    long long worst = 0;
    for (long long j = 1; j <= jj_max; ++j) {
        const long long lhs = eta(j) * eta(j);
        const long long rhs = (1 + eta(j + 1)) * (1 + eta(j - 1));
        worst = std::max(worst, std::llabs(lhs - rhs));
    }
    return worst;
}

} // namespace heis
