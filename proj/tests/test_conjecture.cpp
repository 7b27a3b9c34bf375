#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/conjecture.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace heis;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("x_infinity closed-form values") {
    CHECK(x_infinity(RepIndex(1), 0.0).real() == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-14));
    CHECK(x_infinity(RepIndex(2), 0.0).real() == doctest::Approx(2.0 / (9.0 * kPi)).epsilon(1e-14));
    CHECK(std::abs(x_infinity(RepIndex(1), 1e8)) <= 1e-15);
    CHECK_THROWS_AS(x_infinity(RepIndex(1), Complex(0.0, 1.0)), PoleProximityError);
    CHECK_THROWS_AS(x_infinity(RepIndex(3), Complex(0.0, 2.0)), PoleProximityError);
}

TEST_CASE("x_tilde values and limits") {
    // r = 1 collapses to x_infinity for every jj and mu
    for (int j : {1, 2, 5}) {
        for (double mu : {0.0, 0.7, 4.0}) {
            CHECK(std::abs(x_tilde(RepIndex(j), mu, 1.0) - x_infinity(RepIndex(j), mu)) <= 1e-16);
        }
    }
    // jj=1, r=2/5, mu=0 -> 10/(49 pi)
    CHECK(x_tilde(RepIndex(1), 0.0, 0.4).real() ==
          doctest::Approx(10.0 / (49.0 * kPi)).epsilon(1e-13));
    // ferromagnetic limit r=0 vanishes identically
    for (int j : {1, 2, 3})
        for (double mu : {0.0, 1.3, 9.0})
            CHECK(std::abs(x_tilde(RepIndex(j), mu, 0.0)) <= 1e-17);
    CHECK_THROWS_AS(x_tilde(RepIndex(1), 0.0, -0.1), Error);
}

TEST_CASE("x_tilde leading coefficient, exact rational") {
    CHECK(x_tilde_leading(RepIndex(1), Rational(2, 5)) == Rational(10, 49));
    CHECK(x_tilde_leading(RepIndex(1), Rational(1)) == Rational(1, 4));
    // matches the exact charge leading coefficient (criterion-6 style spot check)
    RationalCharge fig1 = charge_exact(SpinState::parse("1111212"), RepIndex(1));
    CHECK(leading_coefficient(fig1) == x_tilde_leading(RepIndex(1), Rational(2, 5)));
}

TEST_CASE("r -> 1/r invariance") {
    CHECK(r_inversion_check(RepIndex(3), 2.0, 0.3) <=
          1e-12 * std::abs(x_tilde(RepIndex(3), 2.0, 0.3)));
    CHECK(r_inversion_check(RepIndex(2), 0.5, 1.0) == 0.0);
    CHECK(std::abs(x_tilde(RepIndex(1), 0.0, 5.0) - x_tilde(RepIndex(1), 0.0, 0.2)) <= 1e-15);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 30; ++it) {
        const int j = 1 + static_cast<int>(rng() % 4);
        const double r = 0.05 + 3.0 * (rng() % 1000) / 1000.0;
        const double mu = -5.0 + 10.0 * (rng() % 1000) / 1000.0;
        const double scale = std::abs(x_tilde(RepIndex(j), mu, r));
        CHECK(r_inversion_check(RepIndex(j), mu, r) <= 1e-12 * std::max(scale, 1e-6));
    }
}

TEST_CASE("epsilon expansion: cubic remainder") {
    CHECK(epsilon_expansion_check(RepIndex(1), 0.5, 0.0) == 0.0);
    // residual(eps)/eps^3 stays bounded as eps -> 0
    double prev_ratio = 0.0;
    for (double eps : {0.1, 0.05, 0.025, 0.0125}) {
        const double ratio = epsilon_expansion_check(RepIndex(2), 1.0, eps) / (eps * eps * eps);
        if (prev_ratio > 0.0) CHECK(ratio <= 2.0 * prev_ratio);
        prev_ratio = ratio;
    }
    // fitted exponent over eps in {0.01..0.1} at least 2.8
    std::vector<double> xs, ys;
    for (double eps = 0.01; eps <= 0.1001; eps += 0.01) {
        xs.push_back(std::log(eps));
        ys.push_back(std::log(epsilon_expansion_check(RepIndex(2), 1.0, eps)));
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    CHECK(sxy / sxx >= 2.8);
    // jj=1, mu=0, eps=0.1: x_tilde = x_infinity * (1 - 3*0.01/12) to cubic order
    const double lhs = x_tilde(RepIndex(1), 0.0, 0.9).real();
    const double rhs = x_infinity(RepIndex(1), 0.0).real() * (1.0 - 3.0 * 0.01 / 12.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-3));
}

TEST_CASE("x_tilde converges to x_infinity uniformly on the real grid as r -> 1") {
    for (int j : {1, 3}) {
        double prev_sup = 1e300;
        for (double r : {0.9, 0.99, 0.999}) {
            double sup = 0.0;
            for (double mu = -10.0; mu <= 10.01; mu += 0.1) {
                const double xi = x_infinity(RepIndex(j), mu).real();
                sup = std::max(sup, std::abs(x_tilde(RepIndex(j), mu, r).real() - xi) / xi);
            }
            CHECK(sup < prev_sup);
            prev_sup = sup;
        }
        CHECK(prev_sup <= 1e-5);
    }
}

TEST_CASE("deviation: Neel repetitions give the exact O(1) outlier 1/2") {
    // X = 1/(2pi(2mu^2+1)), X~ = X_inf, so |(X - X~)/X| = 1/(2(mu^2+1)), sup = 1/2 at mu=0.
    for (int reps : {1, 3}) {
        SpinState psi = SpinState::parse("12").repeated(reps);
        DeviationReport rep = deviation(psi, RepIndex(1));
        CHECK(rep.delta == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(std::abs(rep.argmax_mu) <= 1e-8);
        CHECK(rep.excluded.empty());
    }
}

TEST_CASE("deviation: exact and numeric backends agree on the overlap band") {
    std::mt19937_64 rng(10);
    std::vector<int> sites(45);
    for (int& v : sites) v = 1 + static_cast<int>(rng() & 1);
    SpinState psi(std::move(sites));
    DeviationReport ex = deviation(psi, RepIndex(1), GridSpec{-10, 10, 201, 10},
                                   ChargeBackend::kExact);
    DeviationReport nu = deviation(psi, RepIndex(1), GridSpec{-10, 10, 201, 10},
                                   ChargeBackend::kNumeric);
    CHECK(ex.delta == doctest::Approx(nu.delta).epsilon(1e-9));
}

TEST_CASE("deviation rejects invalid grids and zero charges") {
    CHECK_THROWS_AS(deviation(SpinState::parse("12"), RepIndex(1), GridSpec{1, -1, 100, 10}),
                    Error);
    CHECK_THROWS_AS(deviation(SpinState::parse("1111"), RepIndex(1)), Error);
}

TEST_CASE("deviation curve rows are self-consistent") {
    auto rows = deviation_curve(SpinState::parse("1111212"), RepIndex(1),
                                GridSpec{-10, 10, 101, 10});
    REQUIRE(rows.size() == 101);
    for (const CurvePoint& p : rows) {
        CHECK(p.rel_deviation ==
              doctest::Approx(std::abs((p.x - p.x_tilde) / p.x)).epsilon(1e-12));
        CHECK(p.x_infinity ==
              doctest::Approx(x_infinity(RepIndex(1), p.mu).real()).epsilon(1e-12));
    }
}

TEST_CASE("thermo integral matches its closed form") {
    CHECK(thermo_integral(0.0) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-8));
    CHECK(thermo_integral(1.0) == doctest::Approx(1.0 / (8.0 * kPi)).epsilon(1e-8));
    CHECK(thermo_integral(1.0, 2.0) == doctest::Approx(2.0 * thermo_integral(1.0)).epsilon(1e-12));
    std::mt19937_64 rng(0);
    for (int it = 0; it < 20; ++it) {
        const double mu = -5.0 + 10.0 * (rng() % 100000) / 100000.0;
        const double expect = 1.0 / (4.0 * kPi * (mu * mu + 1.0));
        CHECK(std::abs(thermo_integral(mu) - expect) <= 1e-8);
    }
}
