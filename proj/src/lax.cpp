#include "heis/lax.hpp"

#include "heis/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace heis {

namespace {

GaussMatrix to_gauss(const RationalMatrix& m) {
    GaussMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = GaussRational(m(i, j));
    return out;
}

GaussMatrix scaled_i(const RationalMatrix& m) {
    // i * m
    GaussMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = GaussRational(Rational(0), m(i, j));
    return out;
}

}  // namespace

GaussMatrix BlockStructure::eval_exact(const GaussRational& mu, const GaussRational& x) const {
    GaussMatrix out = cc;
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j < out.cols(); ++j)
            out(i, j) += mu * cm(i, j) + x * cx(i, j) + mu * x * cmx(i, j);
    return out;
}

GaussPolyMatrix BlockStructure::poly_at_diagonal() const {
    GaussPolyMatrix out(dim(), dim());
    for (Eigen::Index i = 0; i < dim(); ++i)
        for (Eigen::Index j = 0; j < dim(); ++j) {
            std::vector<GaussRational> c{cc(i, j), cm(i, j) + cx(i, j), cmx(i, j)};
            out(i, j) = GaussPoly(std::move(c));
        }
    return out;
}

GaussPolyMatrix BlockStructure::poly_dx_at_diagonal() const {
    GaussPolyMatrix out(dim(), dim());
    for (Eigen::Index i = 0; i < dim(); ++i)
        for (Eigen::Index j = 0; j < dim(); ++j) {
            std::vector<GaussRational> c{cx(i, j), cmx(i, j)};
            out(i, j) = GaussPoly(std::move(c));
        }
    return out;
}

BlockStructure BlockStructure::restricted(const std::vector<int>& idx) const {
    return BlockStructure{restrict_to(cc, idx), restrict_to(cm, idx), restrict_to(cx, idx),
                          restrict_to(cmx, idx)};
}

BlockStructureNum::BlockStructureNum(const BlockStructure& s) {
    auto conv = [](const GaussMatrix& m) {
        Eigen::MatrixXcd out(m.rows(), m.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
        return out;
    };
    cc = conv(s.cc);
    cm = conv(s.cm);
    cx = conv(s.cx);
    cmx = conv(s.cmx);
}

const BlockStructure& LaxStructure::diagonal(int channel) const {
    if (channel == 1) return b11;
    if (channel == 2) return b22;
    throw Error("LaxStructure: channel must be 1 or 2");
}

const BlockStructure& LaxStructure::offdiagonal(int from, int to) const {
    if (from == 1 && to == 2) return b12;
    if (from == 2 && to == 1) return b21;
    throw Error("LaxStructure: off-diagonal indices must differ");
}

LaxStructure build_lax_structure(RepIndex jj) {
    const SpinOperators ops = build_spin_ops(jj);
    const int n = jj.dim();
    const RationalMatrix id = [&] {
        RationalMatrix m = RationalMatrix::Constant(n, n, Rational(0));
        for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }();
    const Rational half(1, 2);

    // a0 = i (sz - 1/2), c0 = i (sz + 1/2): b11 = (mu + a0) (x) (x + c0) - sm (x) sp.
    const GaussMatrix a0 = scaled_i(ops.sz - half * id);
    const GaussMatrix c0 = scaled_i(ops.sz + half * id);
    const GaussMatrix gid = to_gauss(id);
    const GaussMatrix gsp = to_gauss(ops.sp);
    const GaussMatrix gsm = to_gauss(ops.sm);
    const GaussMatrix gsz = to_gauss(ops.sz);

    LaxStructure ls{jj,
                    BlockStructure{},
                    BlockStructure{},
                    BlockStructure{},
                    BlockStructure{}};

    // b11 = (mu*1 + a0) (x) (x*1 + c0) - sm (x) sp
    ls.b11.cmx = kronecker(gid, gid);
    ls.b11.cm = kronecker(gid, c0);
    ls.b11.cx = kronecker(a0, gid);
    ls.b11.cc = kronecker(a0, c0) - kronecker(gsm, gsp);

    // b22 = (mu*1 - c0) (x) (x*1 - a0) - sp (x) sm
    ls.b22.cmx = kronecker(gid, gid);
    ls.b22.cm = kronecker(gid, -a0);
    ls.b22.cx = kronecker(-c0, gid);
    ls.b22.cc = kronecker(c0, a0) - kronecker(gsp, gsm);

    // b12 = i mu^- (1 (x) sp) + i x^+ (sp (x) 1) - sp (x) sz + sz (x) sp
    const GaussRational ih(Rational(0), Rational(1));  // i
    const GaussRational halfg(half);
    ls.b12.cm = ih * kronecker(gid, gsp);
    ls.b12.cx = ih * kronecker(gsp, gid);
    ls.b12.cmx = GaussMatrix::Constant(n * n, n * n, GaussRational(0));
    ls.b12.cc = halfg * kronecker(gid, gsp) - halfg * kronecker(gsp, gid) -
                kronecker(gsp, gsz) + kronecker(gsz, gsp);

    // b21 = i mu^- (1 (x) sm) + i x^+ (sm (x) 1) + sm (x) sz - sz (x) sm
    ls.b21.cm = ih * kronecker(gid, gsm);
    ls.b21.cx = ih * kronecker(gsm, gid);
    ls.b21.cmx = GaussMatrix::Constant(n * n, n * n, GaussRational(0));
    ls.b21.cc = halfg * kronecker(gid, gsm) - halfg * kronecker(gsm, gid) +
                kronecker(gsm, gsz) - kronecker(gsz, gsm);

    return ls;
}

Complex norm_factor(RepIndex jj, const SpectralPoint& p) {
    const Complex ih(0.0, 0.5 * (jj.jj + 1));
    const Complex d = (p.mu - ih) * (p.x + ih);
    if (std::abs(d) < 1e-100)
        throw SingularPointError("norm_factor: evaluation at a singular point");
    return 1.0 / d;
}

GaussRational norm_factor_exact(RepIndex jj, const GaussRational& mu, const GaussRational& x) {
    const GaussRational ih(Rational(0), Rational(jj.jj + 1, 2));
    const GaussRational d = (mu - ih) * (x + ih);
    if (d.is_zero()) throw SingularPointError("norm_factor: evaluation at a singular point");
    return GaussRational(1) / d;
}

Complex norm_factor_dx(RepIndex jj, Complex mu) {
    const Complex ih(0.0, 0.5 * (jj.jj + 1));
    const Complex f = norm_factor(jj, SpectralPoint(mu));
    return -f / (mu + ih);
}

const Eigen::MatrixXcd& LaxBlocks::block(int from, int to) const {
    if (from == 1 && to == 1) return b11;
    if (from == 2 && to == 2) return b22;
    if (from == 1 && to == 2) return b12;
    if (from == 2 && to == 1) return b21;
    throw Error("LaxBlocks: block indices must be 1 or 2");
}

const GaussMatrix& ExactLaxBlocks::block(int from, int to) const {
    if (from == 1 && to == 1) return b11;
    if (from == 2 && to == 2) return b22;
    if (from == 1 && to == 2) return b12;
    if (from == 2 && to == 1) return b21;
    throw Error("ExactLaxBlocks: block indices must be 1 or 2");
}

namespace {

struct StructureCache {
    LaxStructure full;
    BlockStructureNum num_b11, num_b22, num_b12, num_b21;
    TopSectorBlocks top;
};

const StructureCache& structure_cache(RepIndex jj) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<StructureCache>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(jj.jj);
    if (it == cache.end()) {
        auto entry = std::make_unique<StructureCache>(StructureCache{
            build_lax_structure(jj),
            {}, {}, {}, {},
            TopSectorBlocks{jj, top_sector(jj), {}, {}}});
        entry->num_b11 = BlockStructureNum(entry->full.b11);
        entry->num_b22 = BlockStructureNum(entry->full.b22);
        entry->num_b12 = BlockStructureNum(entry->full.b12);
        entry->num_b21 = BlockStructureNum(entry->full.b21);
        const auto idx = entry->top.basis.flat_indices();
        entry->top.diag[0] = entry->full.b11.restricted(idx);
        entry->top.diag[1] = entry->full.b22.restricted(idx);
        entry->top.num_diag[0] = BlockStructureNum(entry->top.diag[0]);
        entry->top.num_diag[1] = BlockStructureNum(entry->top.diag[1]);
        it = cache.emplace(jj.jj, std::move(entry)).first;
    }
    return *it->second;
}

}  // namespace

const TopSectorBlocks& top_sector_blocks(RepIndex jj) { return structure_cache(jj).top; }

LaxBlocks lax_blocks_bare(RepIndex jj, const SpectralPoint& p) {
    const StructureCache& sc = structure_cache(jj);
    return LaxBlocks{jj, false, sc.num_b11.eval(p.mu, p.x), sc.num_b22.eval(p.mu, p.x),
                     sc.num_b12.eval(p.mu, p.x), sc.num_b21.eval(p.mu, p.x)};
}

LaxBlocks lax_blocks(RepIndex jj, const SpectralPoint& p) {
    LaxBlocks lb = lax_blocks_bare(jj, p);
    const Complex f = norm_factor(jj, p);
    lb.b11 *= f;
    lb.b22 *= f;
    lb.b12 *= f;
    lb.b21 *= f;
    lb.normalized = true;
    return lb;
}

LaxBlocks lax_block_derivative(RepIndex jj, Complex mu) {
    const StructureCache& sc = structure_cache(jj);
    const SpectralPoint p(mu);
    const Complex f = norm_factor(jj, p);
    const Complex fdx = norm_factor_dx(jj, mu);
    auto d = [&](const BlockStructureNum& s) {
        return (f * s.eval_dx(mu, mu) + fdx * s.eval(mu, mu)).eval();
    };
    return LaxBlocks{jj, true, d(sc.num_b11), d(sc.num_b22), d(sc.num_b12), d(sc.num_b21)};
}

ExactLaxBlocks lax_blocks_exact(RepIndex jj, const GaussRational& mu, const GaussRational& x,
                                bool normalized) {
    const StructureCache& sc = structure_cache(jj);
    ExactLaxBlocks out{jj, normalized, sc.full.b11.eval_exact(mu, x), sc.full.b22.eval_exact(mu, x),
                       sc.full.b12.eval_exact(mu, x), sc.full.b21.eval_exact(mu, x)};
    if (normalized) {
        const GaussRational f = norm_factor_exact(jj, mu, x);
        for (GaussMatrix* m : {&out.b11, &out.b22, &out.b12, &out.b21})
            for (Eigen::Index i = 0; i < m->rows(); ++i)
                for (Eigen::Index j = 0; j < m->cols(); ++j) (*m)(i, j) *= f;
    }
    return out;
}

} // namespace heis
