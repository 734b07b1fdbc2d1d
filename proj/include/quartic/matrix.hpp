#pragma once

#include <Eigen/Core>

#include "quartic/errors.hpp"
#include "quartic/polynomial.hpp"

namespace Eigen {

template <>
struct NumTraits<quartic::Polynomial> : GenericNumTraits<quartic::Polynomial> {
    using Real = quartic::Polynomial;
    using NonInteger = quartic::Polynomial;
    using Nested = quartic::Polynomial;
    using Literal = quartic::Polynomial;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 50,
        MulCost = 200
    };
};

}  // namespace Eigen

namespace quartic {

template <int N>
using PolyMatrix = Eigen::Matrix<Polynomial, N, N>;

using PolyMatrix3 = PolyMatrix<3>;
using PolyMatrix4 = PolyMatrix<4>;

/// Laplace expansion along the first row. Uses ring operations only, so it
/// is exact for Polynomial and Rational scalars.
template <typename Derived>
typename Derived::Scalar cofactor_determinant(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw StructuralError("determinant of a non-square matrix");
    if (n == 0) return Scalar(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n == 3) {
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    using Dyn = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Scalar det(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        Dyn minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            for (Eigen::Index c = 0, k = 0; c < n; ++c) {
                if (c != j) minor(r - 1, k++) = m(r, c);
            }
        }
        Scalar term = m(0, j) * cofactor_determinant(minor);
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

/// Classical adjugate (transpose of the cofactor matrix); m * adjugate(m) = det(m) * Id.
template <typename Derived>
typename Derived::PlainObject adjugate(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    using Dyn = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw StructuralError("adjugate of a non-square matrix");
    typename Derived::PlainObject adj(n, n);
    if (n == 1) {
        adj(0, 0) = Scalar(1);
        return adj;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            Dyn minor(n - 1, n - 1);
            for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
                    if (c != j) minor(mr, mc++) = m(r, c);
                }
                ++mr;
            }
            Scalar cof = cofactor_determinant(minor);
            adj(j, i) = (i + j) % 2 == 0 ? cof : Scalar(-cof);
        }
    }
    return adj;
}

/// <A,B> = sum_ij a_ij b_ji.
template <typename DA, typename DB>
typename DA::Scalar dot(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
    using Scalar = typename DA::Scalar;
    if (a.rows() != b.cols() || a.cols() != b.rows()) throw StructuralError("dot: dimension mismatch");
    Scalar sum(0);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) sum += a(i, j) * b(j, i);
    }
    return sum;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (!(m(i, j) == m(j, i))) return false;
        }
    }
    return true;
}

}  // namespace quartic
