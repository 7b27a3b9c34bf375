#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/exact_rational.hpp"
#include "heis/monodromy.hpp"

#include <random>

using namespace heis;

namespace {

SpinState random_state(std::mt19937_64& rng, int m) {
    std::vector<int> s(m);
    for (int& v : s) v = 1 + static_cast<int>(rng() & 1);
    return SpinState(std::move(s));
}

QPoly zpoly_from(std::initializer_list<long long> even_coeffs_ascending) {
    std::vector<Rational> c;
    for (long long v : even_coeffs_ascending) c.emplace_back(v);
    return QPoly(std::move(c)).compose_square();
}

}  // namespace

TEST_CASE("golden formula jj=1, psi=1111212") {
    RationalCharge rc = charge_exact(SpinState::parse("1111212"), RepIndex(1));
    CHECK(rc.prefactor == Rational(1, 7));
    CHECK(rc.numerator == zpoly_from({2, 11, 26, 34, 25, 10}));
    CHECK(rc.denominator == zpoly_from({1, 7, 21, 35, 35, 21, 7}));
}

TEST_CASE("golden formula jj=2, psi=1111212 (24th degree)") {
    RationalCharge rc = charge_exact(SpinState::parse("1111212"), RepIndex(2));
    CHECK(rc.prefactor == Rational(12, 7));
    CHECK(rc.numerator ==
          zpoly_from({39573895547ll, 227327105092ll, 599204434384ll, 958560474048ll,
                      1039513800192ll, 804831242240ll, 455242522624ll, 189502291968ll,
                      57839910912ll, 12689080320ll, 1871708160ll, 146800640ll}));
    CHECK(rc.denominator ==
          zpoly_from({356177462887ll, 2204519902544ll, 6304816157920ll, 11037736083712ll,
                      13232857409792ll, 11483489935360ll, 7414633218048ll, 3603429982208ll,
                      1319572668416ll, 360711192576ll, 71485620224ll, 9479127040ll,
                      654311424ll}));
    CHECK(rc.denominator.degree() == 24);
}

TEST_CASE("Neel state: denominator proportional to 2 mu^2 + 1") {
    RationalCharge rc = charge_exact(SpinState::parse("12"), RepIndex(1));
    CHECK(rc.denominator == zpoly_from({1, 2}));
    CHECK(rc.numerator == QPoly(Rational(1)));
    CHECK(rc.prefactor == Rational(1, 2));
    // cross-check against the numeric backend
    CHECK(static_cast<double>(rc.eval_real(10.0L)) ==
          doctest::Approx(charge_numeric(SpinState::parse("12"), RepIndex(1), 10.0).real())
              .epsilon(1e-10));
}

TEST_CASE("adjugate column for the structured 2x2 pattern") {
    // M = [[a, b], [a-1, b+1]] has w = (1,-1) as left unit eigenvector;
    // a nonzero column of Adj(M - I) is (b, 1-a) up to common factors.
    GaussPoly a({GaussRational(2), GaussRational(0), GaussRational(3)});   // 2 + 3 mu^2
    GaussPoly b({GaussRational(0), GaussRational(1)});                     // mu
    GaussPolyMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = a - GaussPoly(GaussRational(1));
    m(1, 1) = b + GaussPoly(GaussRational(1));
    GaussPolyVector v = adjugate_unit_vector(m);
    // proportional to (b, 1-a): cross product must vanish
    GaussPoly one(GaussRational(1));
    CHECK((v(0) * (one - a) - v(1) * b).is_zero());
    CHECK_FALSE(v(0).is_zero());
}

TEST_CASE("adjugate residual vanishes identically for random substates") {
    std::mt19937_64 rng(404);
    for (auto [m, j] : {std::pair{4, 1}, std::pair{3, 2}}) {
        SpinState psi = random_state(rng, m);
        RepIndex jj(j);
        // build the normalized monodromy as num/den polynomial pair
        const TopSectorBlocks& tb = top_sector_blocks(jj);
        GaussPolyMatrix nt(jj.dim(), jj.dim());
        for (int i = 0; i < jj.dim(); ++i)
            for (int c = 0; c < jj.dim(); ++c) nt(i, c) = GaussPoly(GaussRational(i == c ? 1 : 0));
        for (int site : psi.sites) nt = tb.diag[site - 1].poly_at_diagonal() * nt;
        const Rational h(j + 1, 2);
        GaussPoly q({GaussRational(h * h), GaussRational(0), GaussRational(1)});
        GaussPolyVector v = adjugate_unit_vector(nt, poly_pow(q, static_cast<unsigned>(m)));
        CHECK(v.size() == jj.dim());  // residual checked inside
    }
}

TEST_CASE("backend agreement on random states and spectral points") {
    std::mt19937_64 rng(777);
    for (int rep = 0; rep < 6; ++rep) {
        const int m = 2 + static_cast<int>(rng() % 9);
        const int j = 1 + static_cast<int>(rng() % 3);
        SpinState psi = random_state(rng, m);
        RationalCharge rc = charge_exact(psi, RepIndex(j));
        for (int p = 0; p < 20; ++p) {
            const double mu = (static_cast<double>(rng() % 2000001) - 1000000.0) / 100000.0;
            const Complex num = charge_numeric(psi, RepIndex(j), mu);
            const Complex ex = rc.eval(Complex(mu, 0.0));
            CHECK(std::abs(num - ex) <= 1e-10 * std::max(1.0, std::abs(ex)));
        }
    }
}

TEST_CASE("repetition law holds exactly for reduced forms") {
    RationalCharge a = charge_exact(SpinState::parse("12"), RepIndex(1));
    RationalCharge b = charge_exact(SpinState::parse("121212"), RepIndex(1));
    CHECK(a.prefactor == b.prefactor);
    CHECK(a.numerator == b.numerator);
    CHECK(a.denominator == b.denominator);
    RationalCharge c = charge_exact(SpinState::parse("112"), RepIndex(2));
    RationalCharge d = charge_exact(SpinState::parse("112112"), RepIndex(2));
    CHECK(c.prefactor == d.prefactor);
    CHECK(c.numerator == d.numerator);
    CHECK(c.denominator == d.denominator);
}

TEST_CASE("rotation and flip invariance are exact identities of the reduced form") {
    std::mt19937_64 rng(31337);
    SpinState psi = random_state(rng, 7);
    RationalCharge base = charge_exact(psi, RepIndex(2));
    for (int k = 1; k < 7; k += 2) {
        RationalCharge rot = charge_exact(psi.rotated(k), RepIndex(2));
        CHECK(base.prefactor == rot.prefactor);
        CHECK(base.numerator == rot.numerator);
        CHECK(base.denominator == rot.denominator);
    }
    RationalCharge flip = charge_exact(psi.flipped(), RepIndex(2));
    CHECK(base.numerator == flip.numerator);
    CHECK(base.denominator == flip.denominator);
}

TEST_CASE("structure invariants: evenness, integrality, degree bound, degree gap") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 8; ++rep) {
        const int m = 2 + static_cast<int>(rng() % 9);
        const int j = 1 + static_cast<int>(rng() % 2);
        SpinState psi = random_state(rng, m);
        if (psi.n1() == 0 || psi.n2() == 0) continue;
        RationalCharge rc = charge_exact(psi, RepIndex(j));
        REQUIRE_FALSE(rc.is_zero());
        CHECK(rc.numerator.is_even());
        CHECK(rc.denominator.is_even());
        for (const auto& c : rc.numerator.coeffs()) CHECK(c.is_integer());
        for (const auto& c : rc.denominator.coeffs()) CHECK(c.is_integer());
        CHECK(rc.denominator.degree() <= 2 * j * m);
        CHECK(rc.denominator.degree() - rc.numerator.degree() == 2);
        CHECK(rc.denominator.leading().sign() > 0);
        CHECK(integer_content(rc.denominator) == BigInt(1));
        CHECK(integer_content(rc.numerator) == BigInt(1));
    }
}

TEST_CASE("ferromagnetic substate has identically zero charge") {
    RationalCharge rc = charge_exact(SpinState::parse("111"), RepIndex(1));
    CHECK(rc.is_zero());
    CHECK(rc.eval_real(0.5L) == 0.0L);
    CHECK_THROWS_AS(leading_coefficient(rc), DegreeGapError);
}

TEST_CASE("leading coefficients") {
    RationalCharge fig1 = charge_exact(SpinState::parse("1111212"), RepIndex(1));
    CHECK(leading_coefficient(fig1) == Rational(10, 49));
    RationalCharge neel = charge_exact(SpinState::parse("12"), RepIndex(1));
    CHECK(leading_coefficient(neel) == Rational(1, 4));
}

TEST_CASE("degree cap raises a resource error") {
    CHECK_THROWS_AS(charge_exact(SpinState::parse("121121"), RepIndex(3), 10), DegreeCapError);
}

TEST_CASE("JSON round trip reproduces evaluations exactly") {
    RationalCharge rc = charge_exact(SpinState::parse("1111212"), RepIndex(2));
    RationalCharge back = RationalCharge::from_json(rc.to_json());
    CHECK(back.prefactor == rc.prefactor);
    CHECK(back.numerator == rc.numerator);
    CHECK(back.denominator == rc.denominator);
    for (double mu : {0.0, 0.3, 2.0, -7.7})
        CHECK(rc.eval_real(mu) == back.eval_real(mu));
    CHECK_THROWS_AS(RationalCharge::from_json("{not json"), Error);
}
