#pragma once

#include "heis/gauss.hpp"
#include "heis/poly.hpp"
#include "heis/rational.hpp"

#include <Eigen/Core>

#include <vector>

namespace Eigen {

template <>
struct NumTraits<heis::Rational> : GenericNumTraits<heis::Rational> {
    typedef heis::Rational Real;
    typedef heis::Rational NonInteger;
    typedef heis::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60
    };
    static inline Real epsilon() { return heis::Rational(0); }
    static inline Real dummy_precision() { return heis::Rational(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<heis::GaussRational> : GenericNumTraits<heis::GaussRational> {
    typedef heis::GaussRational Real;
    typedef heis::GaussRational NonInteger;
    typedef heis::GaussRational Nested;
    enum {
        IsComplex = 0,  // conjugation handled explicitly by callers
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 120,
        MulCost = 240
    };
    static inline Real epsilon() { return heis::GaussRational(0); }
    static inline Real dummy_precision() { return heis::GaussRational(0); }
    static inline int digits10() { return 0; }
};

template <typename T>
struct NumTraits<heis::Polynomial<T>> : GenericNumTraits<heis::Polynomial<T>> {
    typedef heis::Polynomial<T> Real;
    typedef heis::Polynomial<T> NonInteger;
    typedef heis::Polynomial<T> Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 64,
        AddCost = 1000,
        MulCost = 4000
    };
    static inline Real epsilon() { return heis::Polynomial<T>(); }
    static inline Real dummy_precision() { return heis::Polynomial<T>(); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace heis {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using GaussMatrix = Eigen::Matrix<GaussRational, Eigen::Dynamic, Eigen::Dynamic>;
using GaussVector = Eigen::Matrix<GaussRational, Eigen::Dynamic, 1>;
using GaussPolyMatrix = Eigen::Matrix<GaussPoly, Eigen::Dynamic, Eigen::Dynamic>;
using GaussPolyVector = Eigen::Matrix<GaussPoly, Eigen::Dynamic, 1>;
using QPolyMatrix = Eigen::Matrix<QPoly, Eigen::Dynamic, Eigen::Dynamic>;
using QPolyVector = Eigen::Matrix<QPoly, Eigen::Dynamic, 1>;

/// Kronecker product of two dense matrices (any scalar).
template <typename DerivedA, typename DerivedB>
auto kronecker(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                              a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Submatrix on the given row/column index set (same set for both).
template <typename Derived>
auto restrict_to(const Eigen::MatrixBase<Derived>& m, const std::vector<int>& idx) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(idx.size(), idx.size());
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
    return out;
}

} // namespace heis
