#include "heis/conjecture.hpp"

#include "heis/errors.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>

namespace heis {

namespace {

constexpr double kPi = std::numbers::pi;

double corr_term(int j, double r) {
    // [ j(1-r)(r^{j+1}+1) - 2r(1-r^j) ] / [ 2(r+1)(1-r^{j+1}) ]
    const double rj = std::pow(r, j);
    const double rj1 = rj * r;
    return (j * (1.0 - r) * (rj1 + 1.0) - 2.0 * r * (1.0 - rj)) /
           (2.0 * (r + 1.0) * (1.0 - rj1));
}

}  // namespace

Complex x_infinity(RepIndex jj, Complex mu) {
    const double shift = 0.25 * (jj.jj + 1) * (jj.jj + 1);
    const Complex den = mu * mu + shift;
    if (std::abs(den) < 1e-12)
        throw PoleProximityError("x_infinity: evaluation at the normalization pole");
    return static_cast<double>(jj.jj) / (4.0 * kPi * den);
}

Complex x_tilde(RepIndex jj, Complex mu, double r) {
    if (r < 0.0) throw Error("x_tilde: r must be non-negative");
    if (std::abs(1.0 - r) < 1e-6) {
        // series branch: x_infinity (1 - (jj+2) eps^2 / 12) + O(eps^3)
        const double eps = 1.0 - r;
        return x_infinity(jj, mu) * (1.0 - (jj.jj + 2) * eps * eps / 12.0);
    }
    const double shift = 0.25 * (jj.jj + 1) * (jj.jj + 1);
    const Complex den = mu * mu + shift;
    if (std::abs(den) < 1e-12)
        throw PoleProximityError("x_tilde: evaluation at the normalization pole");
    return (0.5 * jj.jj - corr_term(jj.jj, r)) / (2.0 * kPi * den);
}

Rational x_tilde_leading(RepIndex jj, const Rational& r) {
    const int j = jj.jj;
    if (r.sign() < 0) throw Error("x_tilde_leading: r must be non-negative");
    if (r == Rational(1)) return Rational(j, 4);
    const Rational rj = pow(r, j), rj1 = rj * r;
    const Rational corr = (Rational(j) * (Rational(1) - r) * (rj1 + Rational(1)) -
                           Rational(2) * r * (Rational(1) - rj)) /
                          (Rational(2) * (r + Rational(1)) * (Rational(1) - rj1));
    return (Rational(j, 2) - corr) * Rational(1, 2);
}

double r_inversion_check(RepIndex jj, Complex mu, double r) {
    if (r <= 0.0) throw Error("r_inversion_check: r must be positive");
    return std::abs(x_tilde(jj, mu, r) - x_tilde(jj, mu, 1.0 / r));
}

double epsilon_expansion_check(RepIndex jj, Complex mu, double eps) {
    const Complex lhs = x_tilde(jj, mu, 1.0 - eps);
    const Complex rhs = x_infinity(jj, mu) * (1.0 - (jj.jj + 2) * eps * eps / 12.0);
    return std::abs(lhs - rhs);
}

namespace {

struct ChargeEvaluator {
    std::function<double(double)> eval;  // X(mu) on the real line, may throw
};

ChargeEvaluator make_evaluator(const SpinState& psi, RepIndex jj, ChargeBackend backend) {
    const bool exact = backend == ChargeBackend::kExact ||
                       (backend == ChargeBackend::kAuto && psi.length() <= 60);
    if (exact) {
        RationalCharge rc = charge_exact(psi, jj);
        if (rc.is_zero())
            throw Error("deviation: charge vanishes identically (ferromagnetic substate)");
        // long-double coefficient tables for fast grid evaluation
        auto num = std::make_shared<std::vector<long double>>();
        auto den = std::make_shared<std::vector<long double>>();
        for (const auto& c : rc.numerator.coeffs()) num->push_back(c.to_long_double());
        for (const auto& c : rc.denominator.coeffs()) den->push_back(c.to_long_double());
        const long double pf = rc.prefactor.to_long_double() / std::numbers::pi_v<long double>;
        return ChargeEvaluator{[num, den, pf](double mu) {
            auto horner = [](const std::vector<long double>& c, long double z) {
                long double acc = 0.0L;
                for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
                return acc;
            };
            const long double z = mu;
            long double v;
            if (std::fabs(mu) <= 1.0) {
                v = horner(*num, z) / horner(*den, z);
            } else {
                const long double w = 1.0L / z;
                long double nr = 0.0L, dr = 0.0L;
                for (size_t i = 0; i < num->size(); ++i) nr = nr * w + (*num)[i];
                for (size_t i = 0; i < den->size(); ++i) dr = dr * w + (*den)[i];
                v = nr / dr;
                const int gap = static_cast<int>(den->size()) - static_cast<int>(num->size());
                for (int k = 0; k < gap; ++k) v *= w;
            }
            return static_cast<double>(pf * v);
        }};
    }
    return ChargeEvaluator{[psi, jj](double mu) {
        const Complex x = charge_numeric(psi, jj, mu);
        return x.real();
    }};
}

double effective_ratio(const SpinState& psi) {
    // r = n2/n1, using the r -> 1/r invariance when n1 = 0
    if (psi.n1() == 0) return 0.0;
    return static_cast<double>(psi.n2()) / static_cast<double>(psi.n1());
}

}  // namespace

DeviationReport deviation(const SpinState& psi, RepIndex jj, const GridSpec& grid,
                          ChargeBackend backend) {
    if (grid.points < 2 || !(grid.lo < grid.hi)) throw Error("deviation: invalid grid");
    ChargeEvaluator ev = make_evaluator(psi, jj, backend);
    const double r = effective_ratio(psi);

    DeviationReport rep;
    auto scan = [&](double lo, double hi, int points, bool record_excluded) {
        const double step = (hi - lo) / (points - 1);
        for (int i = 0; i < points; ++i) {
            const double mu = lo + i * step;
            double x;
            try {
                x = ev.eval(mu);
            } catch (const Error&) {
                if (record_excluded) rep.excluded.push_back(mu);
                continue;
            }
            if (x == 0.0) {
                if (record_excluded) rep.excluded.push_back(mu);
                continue;
            }
            const double xt = x_tilde(jj, Complex(mu, 0.0), r).real();
            const double d = std::abs((x - xt) / x);
            if (d > rep.delta) {
                rep.delta = d;
                rep.argmax_mu = mu;
            }
        }
    };

    scan(grid.lo, grid.hi, grid.points, true);
    // tenfold refinement around the coarse argmax
    const double step = (grid.hi - grid.lo) / (grid.points - 1);
    const double lo = std::max(grid.lo, rep.argmax_mu - step);
    const double hi = std::min(grid.hi, rep.argmax_mu + step);
    scan(lo, hi, 2 * grid.refinement + 1, false);
    return rep;
}

std::vector<CurvePoint> deviation_curve(const SpinState& psi, RepIndex jj, const GridSpec& grid,
                                        ChargeBackend backend) {
    ChargeEvaluator ev = make_evaluator(psi, jj, backend);
    const double r = effective_ratio(psi);
    std::vector<CurvePoint> out;
    out.reserve(grid.points);
    const double step = (grid.hi - grid.lo) / (grid.points - 1);
    for (int i = 0; i < grid.points; ++i) {
        const double mu = grid.lo + i * step;
        CurvePoint p{};
        p.mu = mu;
        try {
            p.x = ev.eval(mu);
        } catch (const Error&) {
            continue;
        }
        p.x_tilde = x_tilde(jj, Complex(mu, 0.0), r).real();
        p.x_infinity = heis::x_infinity(jj, Complex(mu, 0.0)).real();
        p.rel_deviation = p.x == 0.0 ? 0.0 : std::abs((p.x - p.x_tilde) / p.x);
        out.push_back(p);
    }
    return out;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw QuadratureError("thermo_integral: adaptive refinement exhausted");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double thermo_integral(double mu, double c) {
    // a = tan(theta) maps the real line to (-pi/2, pi/2)
    auto integrand = [mu](double theta) {
        const double t = std::tan(theta);
        const double sec2 = 1.0 + t * t;
        const double g = 1.0 / ((4.0 * t * t + 1.0) * (t * t + (mu - t) * (mu - t) + 0.5));
        return g * sec2;
    };
    const double a = -0.5 * kPi + 1e-12, b = 0.5 * kPi - 1e-12;
    const double fa = integrand(a), fb = integrand(b), fm = integrand(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double integral =
        adaptive_simpson(integrand, a, b, fa, fb, fm, whole, 1e-10, 48);
    return c / (2.0 * kPi * kPi) * integral;
}

} // namespace heis
