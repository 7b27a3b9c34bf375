#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/lax.hpp"

#include <complex>
#include <random>

using namespace heis;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 101) - 50;
    long long den = 1 + static_cast<long long>(rng() % 20);
    return Rational(num, den);
}

Complex random_complex(std::mt19937_64& rng) {
    auto u = [&] { return (static_cast<double>(rng() % 2000001) - 1000000.0) / 100000.0; };
    return Complex(u(), u());
}

int sector_of(int flat, int dim) { return flat / dim + flat % dim; }

}  // namespace

TEST_CASE("norm factor values and singular point") {
    CHECK(norm_factor(RepIndex(1), SpectralPoint(0.0)) == Complex(1.0, 0.0));
    CHECK(std::abs(norm_factor(RepIndex(2), SpectralPoint(1.0)) - Complex(4.0 / 13.0, 0.0)) <
          1e-15);
    CHECK(norm_factor_exact(RepIndex(2), GaussRational(1), GaussRational(1)) ==
          GaussRational(Rational(4, 13)));
    CHECK_THROWS_AS(norm_factor(RepIndex(1), SpectralPoint(Complex(0.0, 1.0))),
                    SingularPointError);
    CHECK_THROWS_AS(norm_factor_exact(RepIndex(1), GaussRational(Rational(0), Rational(1)),
                                      GaussRational(0)),
                    SingularPointError);
}

TEST_CASE("determinant law: top-sector det of normalized b11 equals mu^2/(mu^2+1) for jj=1") {
    std::mt19937_64 rng(11);
    const auto idx = top_sector(RepIndex(1)).flat_indices();
    for (int rep = 0; rep < 50; ++rep) {
        Rational mur = random_rational(rng);
        GaussRational mu(mur);
        ExactLaxBlocks lb = lax_blocks_exact(RepIndex(1), mu, mu, true);
        GaussMatrix t = restrict_to(lb.b11, idx);
        GaussRational det = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
        Rational mu2 = mur * mur;
        CHECK(det == GaussRational(mu2 / (mu2 + Rational(1))));
    }
    // at mu = x = 0 the determinant vanishes
    ExactLaxBlocks z = lax_blocks_exact(RepIndex(1), GaussRational(0), GaussRational(0), true);
    GaussMatrix t0 = restrict_to(z.b11, idx);
    CHECK((t0(0, 0) * t0(1, 1) - t0(0, 1) * t0(1, 0)).is_zero());
}

TEST_CASE("diagonal blocks preserve S^z sectors exactly") {
    std::mt19937_64 rng(5);
    for (int j = 1; j <= 6; ++j) {
        RepIndex jj(j);
        const int dim = jj.dim();
        for (int rep = 0; rep < 100; ++rep) {
            SpectralPoint p(random_complex(rng), random_complex(rng));
            LaxBlocks lb = lax_blocks(jj, p);
            for (const auto* b : {&lb.b11, &lb.b22}) {
                for (Eigen::Index r = 0; r < b->rows(); ++r)
                    for (Eigen::Index c = 0; c < b->cols(); ++c)
                        if (sector_of(static_cast<int>(r), dim) !=
                            sector_of(static_cast<int>(c), dim))
                            CHECK((*b)(r, c) == Complex(0.0, 0.0));
            }
        }
    }
}

TEST_CASE("diagonal blocks commute with total S^z exactly (exact backend)") {
    std::mt19937_64 rng(6);
    for (int j = 1; j <= 4; ++j) {
        RepIndex jj(j);
        GaussRational mu(random_rational(rng)), x(random_rational(rng));
        ExactLaxBlocks lb = lax_blocks_exact(jj, mu, x, false);
        SpinOperators ops = build_spin_ops(jj);
        GaussMatrix sz_tot(jj.dim() * jj.dim(), jj.dim() * jj.dim());
        for (int a = 0; a < jj.dim(); ++a)
            for (int b = 0; b < jj.dim(); ++b)
                for (int c = 0; c < jj.dim(); ++c)
                    for (int d = 0; d < jj.dim(); ++d)
                        sz_tot(a * jj.dim() + b, c * jj.dim() + d) =
                            (b == d ? GaussRational(ops.sz(a, c)) : GaussRational(0)) +
                            (a == c ? GaussRational(ops.sz(b, d)) : GaussRational(0));
        for (const GaussMatrix* b : {&lb.b11, &lb.b22}) {
            GaussMatrix comm = (*b) * sz_tot - sz_tot * (*b);
            for (Eigen::Index r = 0; r < comm.rows(); ++r)
                for (Eigen::Index c = 0; c < comm.cols(); ++c) CHECK(comm(r, c).is_zero());
        }
    }
}

TEST_CASE("x-derivative matches central finite differences") {
    auto check_fd = [](int j, double mu) {
        RepIndex jj(j);
        const double h = 1e-6;
        LaxBlocks d = lax_block_derivative(jj, mu);
        LaxBlocks up = lax_blocks(jj, SpectralPoint(mu, mu + h));
        LaxBlocks dn = lax_blocks(jj, SpectralPoint(mu, mu - h));
        for (auto [num, fd] : {std::pair{&d.b11, std::pair{&up.b11, &dn.b11}},
                               std::pair{&d.b22, std::pair{&up.b22, &dn.b22}},
                               std::pair{&d.b12, std::pair{&up.b12, &dn.b12}},
                               std::pair{&d.b21, std::pair{&up.b21, &dn.b21}}}) {
            Eigen::MatrixXcd approx = (*fd.first - *fd.second) / (2.0 * h);
            double rel = (approx - *num).norm() / std::max(1e-30, num->norm());
            CHECK(rel <= 1e-8);
        }
    };
    check_fd(1, 0.7);
    check_fd(3, 2.3);
}

TEST_CASE("derivative of b11 still commutes with total S^z") {
    RepIndex jj(2);
    const int dim = jj.dim();
    LaxBlocks d = lax_block_derivative(jj, 0.37);
    for (Eigen::Index r = 0; r < d.b11.rows(); ++r)
        for (Eigen::Index c = 0; c < d.b11.cols(); ++c)
            if (sector_of(static_cast<int>(r), dim) != sector_of(static_cast<int>(c), dim))
                CHECK(d.b11(r, c) == Complex(0.0, 0.0));
}

TEST_CASE("unnormalized accessor differs from normalized by the factor f") {
    RepIndex jj(2);
    SpectralPoint p(Complex(0.3, 0.1), Complex(-0.2, 0.4));
    LaxBlocks bare = lax_blocks_bare(jj, p);
    LaxBlocks norm = lax_blocks(jj, p);
    const Complex f = norm_factor(jj, p);
    CHECK((norm.b11 - f * bare.b11).norm() <= 1e-14 * norm.b11.norm());
    CHECK((norm.b21 - f * bare.b21).norm() <= 1e-14 * std::max(1.0, norm.b21.norm()));
    CHECK_FALSE(bare.normalized);
    CHECK(norm.normalized);
}

TEST_CASE("w left-invariance of normalized diagonal blocks, numeric jj=1 real mu") {
    RepIndex jj(1);
    const auto idx = top_sector(jj).flat_indices();
    for (double mu : {0.0, 0.5, 1.7, -3.2}) {
        LaxBlocks lb = lax_blocks(jj, SpectralPoint(mu));
        Eigen::RowVector2cd w;
        w << 1.0, -1.0;
        for (const auto* b : {&lb.b11, &lb.b22}) {
            Eigen::MatrixXcd t(2, 2);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) t(r, c) = (*b)(idx[r], idx[c]);
            CHECK((w * t - w).norm() <= 1e-13);
        }
    }
}

TEST_CASE("jj=1 off-diagonal block reproduces the displayed norm ratio") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        double mu = (static_cast<double>(rng() % 2001) - 1000.0) / 100.0;
        double x = (static_cast<double>(rng() % 2001) - 1000.0) / 100.0;
        LaxBlocks lb = lax_blocks(RepIndex(1), SpectralPoint(mu, x));
        Eigen::Vector4cd v;
        for (int i = 0; i < 4; ++i) v(i) = random_complex(rng);
        const double lhs = (lb.b12 * v).squaredNorm() / v.squaredNorm();
        const double num = std::norm((Complex(mu, -1.0)) * v(1) + (Complex(x, 1.0)) * v(2)) +
                           (mu * mu + x * x) * std::norm(v(3));
        const double rhs = num / ((1.0 + mu * mu) * (1.0 + x * x)) / v.squaredNorm();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}
