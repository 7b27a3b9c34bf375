#include "heis/exact_rational.hpp"

#include "heis/errors.hpp"
#include "heis/lax.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>

namespace heis {

namespace {

// ----------------------------------------------------------------------
// evaluation

template <typename S>
S horner(const std::vector<Rational>& coeffs, const S& z) {
    S acc(0);
    for (size_t i = coeffs.size(); i-- > 0;)
        acc = acc * z + S(coeffs[i].to_long_double());
    return acc;
}

template <typename S>
S eval_ratio(const QPoly& num, const QPoly& den, const S& z) {
    if (num.is_zero()) return S(0);
    const int dn = num.degree(), dd = den.degree();
    if (std::abs(z) <= 1.0L) {
        return horner(num.coeffs(), z) / horner(den.coeffs(), z);
    }
    // reversed-coefficient Horner in 1/z avoids overflow at large |z|
    const S w = S(1) / z;
    std::vector<Rational> nrev(num.coeffs().rbegin(), num.coeffs().rend());
    std::vector<Rational> drev(den.coeffs().rbegin(), den.coeffs().rend());
    S r = horner(nrev, w) / horner(drev, w);
    for (int k = 0; k < dd - dn; ++k) r = r * w;
    return r;
}

// ----------------------------------------------------------------------
// Bareiss determinant and adjugate columns

template <typename T>
Polynomial<T> bareiss_det(Eigen::Matrix<Polynomial<T>, Eigen::Dynamic, Eigen::Dynamic> a) {
    using Poly = Polynomial<T>;
    const Eigen::Index n = a.rows();
    if (n == 0) return Poly(T(1));
    if (n == 1) return a(0, 0);
    int sign = 1;
    Poly prev(T(1));
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            Eigen::Index r = k + 1;
            while (r < n && a(r, k).is_zero()) ++r;
            if (r == n) return Poly();
            for (Eigen::Index j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = exact_divide(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    Poly det = a(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

template <typename T>
Polynomial<T> minor_det(const Eigen::Matrix<Polynomial<T>, Eigen::Dynamic, Eigen::Dynamic>& a,
                        Eigen::Index drop_row, Eigen::Index drop_col) {
    const Eigen::Index n = a.rows();
    Eigen::Matrix<Polynomial<T>, Eigen::Dynamic, Eigen::Dynamic> sub(n - 1, n - 1);
    Eigen::Index ri = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i == drop_row) continue;
        Eigen::Index cj = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == drop_col) continue;
            sub(ri, cj++) = a(i, j);
        }
        ++ri;
    }
    return bareiss_det(std::move(sub));
}

/// Column `l` of Adj(a): entries (-1)^{k+l} det(a without row l, column k).
template <typename T>
Eigen::Matrix<Polynomial<T>, Eigen::Dynamic, 1> adjugate_column(
    const Eigen::Matrix<Polynomial<T>, Eigen::Dynamic, Eigen::Dynamic>& a, Eigen::Index l) {
    const Eigen::Index n = a.rows();
    Eigen::Matrix<Polynomial<T>, Eigen::Dynamic, 1> v(n);
    if (n == 1) {
        v(0) = Polynomial<T>(T(1));
        return v;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        Polynomial<T> d = minor_det(a, l, k);
        v(k) = ((k + l) % 2 == 0) ? d : -d;
    }
    return v;
}

// ----------------------------------------------------------------------
// reality checks

Rational real_checked(const GaussRational& g, const char* where) {
    if (!g.imag().is_zero()) throw InternalError(std::string(where) + ": imaginary part survives");
    return g.real();
}

RationalMatrix real_part(const GaussMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).real();
    return out;
}

RationalMatrix imag_part(const GaussMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).imag();
    return out;
}

// constant-matrix application: (c * y) with polynomial vector y
QPolyVector apply_const(const RationalMatrix& c, const QPolyVector& y) {
    QPolyVector out(c.rows());
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
        QPoly acc;
        for (Eigen::Index j = 0; j < c.cols(); ++j) {
            if (c(i, j).is_zero()) continue;
            acc += y(j) * c(i, j);
        }
        out(i) = std::move(acc);
    }
    return out;
}

QPoly dot(const QPolyVector& a, const QPolyVector& b) {
    QPoly acc;
    for (Eigen::Index i = 0; i < a.size(); ++i) acc += a(i) * b(i);
    return acc;
}

}  // namespace

// ----------------------------------------------------------------------

long double RationalCharge::eval_real(long double mu) const {
    if (is_zero()) return 0.0L;
    const long double v = eval_ratio(numerator, denominator, mu);
    return prefactor.to_long_double() / std::numbers::pi_v<long double> * v;
}

std::complex<long double> RationalCharge::eval(std::complex<long double> mu) const {
    if (is_zero()) return {0.0L, 0.0L};
    const std::complex<long double> v = eval_ratio(numerator, denominator, mu);
    return prefactor.to_long_double() / std::numbers::pi_v<long double> * v;
}

std::complex<double> RationalCharge::eval(std::complex<double> mu) const {
    const std::complex<long double> r = eval(std::complex<long double>(mu.real(), mu.imag()));
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

QPoly poly_matrix_det(QPolyMatrix a) { return bareiss_det(std::move(a)); }
GaussPoly poly_matrix_det(GaussPolyMatrix a) { return bareiss_det(std::move(a)); }

GaussPolyVector adjugate_unit_vector(const GaussPolyMatrix& m_num, const GaussPoly& m_den) {
    const Eigen::Index n = m_num.rows();
    GaussPolyMatrix a = m_num;
    for (Eigen::Index i = 0; i < n; ++i) a(i, i) -= m_den;
    if (!bareiss_det(a).is_zero())
        throw Error("adjugate_unit_vector: det(m - I) does not vanish identically");
    for (Eigen::Index l = 0; l < n; ++l) {
        GaussPolyVector v = adjugate_column(a, l);
        bool nonzero = false;
        for (Eigen::Index i = 0; i < n; ++i) nonzero = nonzero || !v(i).is_zero();
        if (!nonzero) continue;
        // clear common polynomial factors (monic gcd over the field)
        GaussPoly g;
        for (Eigen::Index i = 0; i < n; ++i) g = poly_gcd(g, v(i));
        if (g.degree() > 0)
            for (Eigen::Index i = 0; i < n; ++i) v(i) = exact_divide(v(i), g);
        // residual must vanish identically
        for (Eigen::Index i = 0; i < n; ++i) {
            GaussPoly res;
            for (Eigen::Index j = 0; j < n; ++j) res += a(i, j) * v(j);
            if (!res.is_zero())
                throw InternalError("adjugate_unit_vector: residual (m - I) v != 0");
        }
        return v;
    }
    throw AdjugateRankError("adjugate_unit_vector: all adjugate columns vanish");
}

RationalCharge charge_exact(const SpinState& psi, RepIndex jj, int degree_cap) {
    const int m = psi.length();
    const int j = jj.jj;
    const int n = jj.dim();
    if (2 * j * m > degree_cap)
        throw DegreeCapError("charge_exact: estimated degree " + std::to_string(2 * j * m) +
                             " exceeds cap " + std::to_string(degree_cap));

    const TopSectorBlocks& tb = top_sector_blocks(jj);
    const Rational h(j + 1, 2);

    // Bare diagonal blocks at x = mu are real and even in mu; in t = mu^2
    // they read  B_t = C0 + t * C2.  Both facts are asserted, not assumed:
    // the construction starts from explicitly complex block entries.
    QPolyMatrix bt[2];
    RationalMatrix dx_re[2], dx_im[2], dxm_re[2], dxm_im[2];
    for (int ch = 0; ch < 2; ++ch) {
        const BlockStructure& s = tb.diag[ch];
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index k = 0; k < n; ++k)
                if (!(s.cm(i, k) + s.cx(i, k)).is_zero())
                    throw InternalError("charge_exact: odd mu term survives on the top sector");
        QPolyMatrix b(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index k = 0; k < n; ++k)
                b(i, k) = QPoly({real_checked(s.cc(i, k), "charge_exact: B"),
                                 real_checked(s.cmx(i, k), "charge_exact: B")});
        bt[ch] = std::move(b);
        // d/dx B at x = mu is dx0 + mu*dx1 with constant complex matrices.
        dx_re[ch] = real_part(s.cx);
        dx_im[ch] = imag_part(s.cx);
        dxm_re[ch] = real_part(s.cmx);
        dxm_im[ch] = imag_part(s.cmx);
    }

    // q(t) = t + (j+1)^2/4 and its M-th power.
    const QPoly qt({h * h, Rational(1)});
    const QPoly dt = poly_pow(qt, static_cast<unsigned>(m));

    // Monodromy product (rightmost factor = site 1) and prefix vectors.
    QPolyMatrix nt = QPolyMatrix::Constant(n, n, QPoly());
    for (int i = 0; i < n; ++i) nt(i, i) = QPoly(Rational(1));
    for (int site : psi.sites) nt = bt[site - 1] * nt;

    const Eigen::VectorXi w = w_vector(jj);

    // det(M - I) = 0 witness: w is a left eigenvector of every factor,
    // hence w^T N = q^M w^T exactly.
    for (int c = 0; c < n; ++c) {
        QPoly acc;
        for (int r = 0; r < n; ++r) acc += nt(r, c) * Rational(w(r));
        QPoly expect = dt * Rational(w(c));
        if (acc != expect) throw InternalError("charge_exact: w is not a left unit eigenvector");
    }

    // A = N - q^M I; v = adjugate column, content-cleared.
    QPolyMatrix a = nt;
    for (int i = 0; i < n; ++i) a(i, i) -= dt;
    QPolyVector v;
    bool have_v = false;
    for (int l = 0; l < n && !have_v; ++l) {
        v = adjugate_column(a, static_cast<Eigen::Index>(l));
        for (int i = 0; i < n; ++i) have_v = have_v || !v(i).is_zero();
    }
    if (!have_v) throw AdjugateRankError("charge_exact: all adjugate columns vanish");
    {
        // clear denominators, integer content and common polynomial factors
        BigInt lden(1);
        for (int i = 0; i < n; ++i) {
            BigInt d = denominator_lcm(v(i));
            lden = lden / gcd(lden, d) * d;
        }
        for (int i = 0; i < n; ++i) v(i) = v(i) * Rational(lden);
        QPoly g;
        for (int i = 0; i < n; ++i) g = zpoly_gcd(g, v(i));
        if (!g.is_zero() && g.degree() >= 0)
            for (int i = 0; i < n; ++i) v(i) = exact_divide(v(i), g);
    }
    // residual check (m - I) v = 0
    for (int i = 0; i < n; ++i) {
        QPoly res;
        for (int k = 0; k < n; ++k) res += a(i, k) * v(k);
        if (!res.is_zero()) throw InternalError("charge_exact: (M - I) v != 0");
    }

    QPoly wv;
    for (int i = 0; i < n; ++i) wv += v(i) * Rational(w(i));
    if (wv.is_zero())
        throw Error("charge_exact: w.v vanishes identically in mu (degenerate substate)");

    // Prefix vectors y_k = B_k ... B_1 v.
    std::vector<QPolyVector> y(m + 1);
    y[0] = v;
    for (int k = 1; k <= m; ++k) {
        const QPolyMatrix& b = bt[psi.sites[k - 1] - 1];
        QPolyVector next(n);
        for (int i = 0; i < n; ++i) {
            QPoly acc;
            for (int c = 0; c < n; ++c) acc += b(i, c) * y[k - 1](c);
            next(i) = std::move(acc);
        }
        y[k] = std::move(next);
    }

    // Suffix row u_k = w^T B_M ... B_{k+1}, walked from k = M down to 1,
    // accumulating the derivative contraction split into parities:
    //   re0 = re0_e(t) + mu*re0_o(t),  im0 = im0_e(t) + mu*im0_o(t).
    QPolyVector u(n);
    for (int i = 0; i < n; ++i) u(i) = QPoly(Rational(w(i)));
    QPoly re0_e, re0_o, im0_e, im0_o;
    for (int k = m; k >= 1; --k) {
        const int ch = psi.sites[k - 1] - 1;
        const QPolyVector& yk = y[k - 1];
        const QPoly a_e = dot(u, apply_const(dx_re[ch], yk));
        const QPoly a_o = dot(u, apply_const(dxm_re[ch], yk));
        const QPoly b_e = dot(u, apply_const(dx_im[ch], yk));
        const QPoly b_o = dot(u, apply_const(dxm_im[ch], yk));
        const QPoly c_e = dot(u, y[k]);  // u_k . (B_k y_{k-1})
        // re0 += mu*a - h*b - c ; im0 += mu*b + h*a   with a = a_e + mu a_o, etc.
        re0_e += QPoly({Rational(0), Rational(1)}) * a_o - b_e * h - c_e;
        re0_o += a_e - b_o * h;
        im0_e += QPoly({Rational(0), Rational(1)}) * b_o + a_e * h;
        im0_o += b_e + a_o * h;
        // u_{k-1} = u_k B_k
        const QPolyMatrix& b = bt[ch];
        QPolyVector nu(n);
        for (int c = 0; c < n; ++c) {
            QPoly acc;
            for (int r = 0; r < n; ++r) acc += b(r, c) * u(r);
            nu(c) = std::move(acc);
        }
        u = std::move(nu);
    }

    // Imaginary part of X must cancel identically:  mu*re0 + h*im0 == 0.
    const QPoly tpoly({Rational(0), Rational(1)});
    if (!(tpoly * re0_o + im0_e * h).is_zero() || !(re0_e + im0_o * h).is_zero())
        throw InternalError("charge_exact: imaginary part does not cancel");
    // X even in mu:  mu*im0 - h*re0 must have no odd part.
    if (!(im0_e - re0_o * h).is_zero())
        throw InternalError("charge_exact: odd part does not cancel");
    const QPoly q_num = tpoly * im0_o - re0_e * h;  // Q(t): X*pi = Q/(2M q^{M+1} wv)

    RationalCharge rc;
    rc.jj = j;
    rc.psi_len = m;
    if (q_num.is_zero()) {
        rc.prefactor = Rational(0);
        rc.numerator = QPoly();
        rc.denominator = QPoly(Rational(1));
        return rc;
    }

    const QPoly den_poly = poly_pow(qt, static_cast<unsigned>(m + 1)) * wv;
    const QPoly g = zpoly_gcd(q_num, den_poly);
    QPoly num_red = exact_divide(q_num, g);
    QPoly den_red = exact_divide(den_poly, g);

    // Primitive normalization; the rational content goes into the prefactor.
    auto signed_content = [](const QPoly& p) {
        const BigInt lden = denominator_lcm(p);
        QPoly scaled = p * Rational(lden);
        Rational c(integer_content(scaled), lden);
        return scaled.leading().sign() < 0 ? -c : c;
    };
    const Rational cn = signed_content(num_red);
    const Rational cd = signed_content(den_red);
    rc.prefactor = cn / (cd * Rational(2 * m));
    rc.numerator = (num_red * cn.inverse()).compose_square();
    rc.denominator = (den_red * cd.inverse()).compose_square();

    if (rc.denominator.degree() > 2 * j * m)
        throw InternalError("charge_exact: reduced denominator exceeds the 2*j*M bound");
    return rc;
}

Rational leading_coefficient(const RationalCharge& rc) {
    if (rc.is_zero() || rc.denominator.degree() - rc.numerator.degree() != 2)
        throw DegreeGapError("leading_coefficient: degree gap is not 2");
    return rc.prefactor * rc.numerator.leading() / rc.denominator.leading();
}

// ----------------------------------------------------------------------
// JSON serialization (decimal strings keep arbitrary precision intact)

std::string RationalCharge::to_json() const {
    nlohmann::json out;
    out["schema"] = "rational-charge/v1";
    out["jj"] = jj;
    out["m"] = psi_len;
    out["prefactor_num"] = prefactor.num().to_string();
    out["prefactor_den"] = prefactor.den().to_string();
    auto coeff_strings = [](const QPoly& p) {
        std::vector<std::string> out;
        const QPoly t = p.is_zero() ? QPoly() : p.even_part_in_square();
        for (const auto& c : t.coeffs()) out.push_back(c.num().to_string());
        return out;
    };
    out["numerator"] = coeff_strings(numerator);
    out["denominator"] = coeff_strings(denominator);
    return out.dump();
}

RationalCharge RationalCharge::from_json(const std::string& text) {
    nlohmann::json in;
    try {
        in = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("RationalCharge: bad JSON: ") + e.what());
    }
    if (in.value("schema", "") != std::string("rational-charge/v1"))
        throw Error("RationalCharge: unknown schema");
    RationalCharge rc;
    rc.jj = in.at("jj").get<int>();
    rc.psi_len = in.at("m").get<int>();
    rc.prefactor = Rational(BigInt::from_string(in.at("prefactor_num").get<std::string>()),
                            BigInt::from_string(in.at("prefactor_den").get<std::string>()));
    auto poly_from = [](const nlohmann::json& arr) {
        std::vector<Rational> c;
        for (const auto& s : arr) c.emplace_back(BigInt::from_string(s.get<std::string>()));
        return QPoly(std::move(c)).compose_square();
    };
    rc.numerator = poly_from(in.at("numerator"));
    rc.denominator = poly_from(in.at("denominator"));
    return rc;
}

} // namespace heis
