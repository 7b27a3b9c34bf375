#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/lax.hpp"
#include "heis/spin_algebra.hpp"

#include <random>
#include <set>

using namespace heis;

namespace {

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
    return a * b - b * a;
}

bool is_zero(const RationalMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

Rational random_rational(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 101) - 50;
    long long den = 1 + static_cast<long long>(rng() % 20);
    return Rational(num, den);
}

GaussMatrix restrict_exact(const GaussMatrix& full, RepIndex jj) {
    return restrict_to(full, top_sector(jj).flat_indices());
}

// Row-vector action w^T * m.
GaussVector left_apply(const Eigen::VectorXi& w, const GaussMatrix& m) {
    GaussVector out(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        GaussRational acc(0);
        for (Eigen::Index i = 0; i < m.rows(); ++i) acc += GaussRational(Rational(w(i))) * m(i, j);
        out(j) = acc;
    }
    return out;
}

}  // namespace

TEST_CASE("su(2) algebra holds exactly for jj <= 8") {
    for (int j = 1; j <= 8; ++j) {
        RepIndex jj(j);
        SpinOperators ops = build_spin_ops(jj);
        const int n = jj.dim();
        RationalMatrix id = RationalMatrix::Constant(n, n, Rational(0));
        for (int i = 0; i < n; ++i) id(i, i) = Rational(1);

        CHECK(is_zero(commutator(ops.sp, ops.sm) - Rational(2) * ops.sz));
        CHECK(is_zero(commutator(ops.sz, ops.sp) - ops.sp));
        CHECK(is_zero(commutator(ops.sz, ops.sm) + ops.sm));

        // Casimir: sp sm + sm sp + 2 sz^2 = 2 (j/2)(j/2+1) I
        RationalMatrix casimir = ops.sp * ops.sm + ops.sm * ops.sp + Rational(2) * (ops.sz * ops.sz);
        Rational expect = Rational(2) * Rational(j, 2) * (Rational(j, 2) + Rational(1));
        CHECK(is_zero(casimir - expect * id));

        // sz spectrum {-j/2, ..., +j/2} in steps of 1
        std::set<std::string> spectrum, expected;
        for (int k = 0; k < n; ++k) {
            spectrum.insert(ops.sz(k, k).to_string());
            expected.insert((Rational(j, 2) - Rational(k)).to_string());
        }
        CHECK(spectrum == expected);
    }
}

TEST_CASE("jj=1 gives the spin-1/2 spectrum, jj=2 the spin-1 spectrum") {
    SpinOperators half = build_spin_ops(RepIndex(1));
    CHECK(((half.sz(0, 0) == Rational(1, 2) && half.sz(1, 1) == Rational(-1, 2)) ||
           (half.sz(0, 0) == Rational(-1, 2) && half.sz(1, 1) == Rational(1, 2))));
    SpinOperators one = build_spin_ops(RepIndex(2));
    std::set<std::string> sp{one.sz(0, 0).to_string(), one.sz(1, 1).to_string(),
                             one.sz(2, 2).to_string()};
    CHECK(sp == std::set<std::string>{"-1", "0", "1"});
}

TEST_CASE("top sector enumeration") {
    SectorBasis s1 = top_sector(RepIndex(1));
    CHECK(s1.indices == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
    SectorBasis s2 = top_sector(RepIndex(2));
    CHECK(s2.indices == std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(top_sector(RepIndex(4)).indices.size() == 5);
    CHECK(s2.sz_total == Rational(0));
}

TEST_CASE("w vector components") {
    Eigen::VectorXi w1 = w_vector(RepIndex(1));
    CHECK(w1(0) == 1);
    CHECK(w1(1) == -1);
    Eigen::VectorXi w2 = w_vector(RepIndex(2));
    CHECK(w2(0) == 1);
    CHECK(w2(1) == -1);
    CHECK(w2(2) == 1);
}

TEST_CASE("w is an exact left unit eigenvector of both diagonal blocks, jj <= 8") {
    std::mt19937_64 rng(42);
    for (int j = 1; j <= 8; ++j) {
        RepIndex jj(j);
        const Eigen::VectorXi w = w_vector(jj);
        for (int rep = 0; rep < 3; ++rep) {
            GaussRational mu(random_rational(rng));
            ExactLaxBlocks lb = lax_blocks_exact(jj, mu, mu, true);
            for (int ch : {1, 2}) {
                GaussMatrix top = restrict_exact(lb.block(ch, ch), jj);
                GaussVector res = left_apply(w, top);
                for (int k = 0; k <= j; ++k)
                    CHECK(res(k) == GaussRational(Rational(w(k))));
            }
        }
    }
}

TEST_CASE("canonical left-action relations hold entrywise for jj <= 5") {
    std::mt19937_64 rng(7);
    for (int j = 1; j <= 5; ++j) {
        RepIndex jj(j);
        for (int rep = 0; rep < 4; ++rep) {
            Rational mur = random_rational(rng);
            GaussRational mu(mur);
            ExactLaxBlocks lb = lax_blocks_exact(jj, mu, mu, true);
            GaussMatrix b11 = restrict_exact(lb.b11, jj);
            GaussMatrix b22 = restrict_exact(lb.b22, jj);
            const GaussRational f = norm_factor_exact(jj, mu, mu);
            const Rational mu2 = mur * mur;
            for (int k = 0; k <= j; ++k) {
                // row k of b11: ((2k+1-j)^2 + 4 mu^2)/4 on the diagonal and
                // k(k-j-1) at column k-1, all scaled by f.
                const Rational d11 = (Rational((2 * k + 1 - j) * (2 * k + 1 - j)) +
                                      Rational(4) * mu2) * Rational(1, 4);
                const Rational o11 = Rational(static_cast<long long>(k) * (k - j - 1));
                const Rational d22 = (Rational((2 * k - 1 - j) * (2 * k - 1 - j)) +
                                      Rational(4) * mu2) * Rational(1, 4);
                const Rational o22 = Rational(static_cast<long long>(k + 1) * (k - j));
                for (int l = 0; l <= j; ++l) {
                    GaussRational want11(0), want22(0);
                    if (l == k) {
                        want11 = f * GaussRational(d11);
                        want22 = f * GaussRational(d22);
                    } else if (l == k - 1) {
                        want11 = f * GaussRational(o11);
                    } else if (l == k + 1) {
                        want22 = f * GaussRational(o22);
                    }
                    CHECK(b11(k, l) == want11);
                    CHECK(b22(k, l) == want22);
                }
            }
        }
    }
}
