#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "bdcoh/errors.hpp"
#include "bdcoh/quad_ext.hpp"
#include "bdcoh/rational.hpp"
#include "bdcoh/rational_function.hpp"

namespace Eigen {

template <>
struct NumTraits<bdcoh::Rational> : GenericNumTraits<bdcoh::Rational> {
  using Real = bdcoh::Rational;
  using NonInteger = bdcoh::Rational;
  using Nested = bdcoh::Rational;
  using Literal = bdcoh::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
};

template <class Base>
struct NumTraits<bdcoh::QuadExt<Base>> : GenericNumTraits<bdcoh::QuadExt<Base>> {
  using Real = bdcoh::QuadExt<Base>;
  using NonInteger = bdcoh::QuadExt<Base>;
  using Nested = bdcoh::QuadExt<Base>;
  using Literal = bdcoh::QuadExt<Base>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32
  };
};

template <>
struct NumTraits<bdcoh::RationalFunction> : GenericNumTraits<bdcoh::RationalFunction> {
  using Real = bdcoh::RationalFunction;
  using NonInteger = bdcoh::RationalFunction;
  using Nested = bdcoh::RationalFunction;
  using Literal = bdcoh::RationalFunction;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 64,
    MulCost = 128
  };
};

}  // namespace Eigen

namespace bdcoh {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
bool exactly_equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Entrywise Galois conjugation.
template <class Scalar>
Matrix<Scalar> conjugate(const Matrix<Scalar>& m) {
  return m.unaryExpr([](const Scalar& x) { return conjugate(x); });
}

template <class Scalar>
bool is_diagonal(const Matrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && !is_zero(m(i, j))) return false;
  return true;
}

template <class Scalar>
Matrix<Scalar> diagonal_matrix(const std::vector<Scalar>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

template <class Target, class Source>
Matrix<Target> matrix_cast(const Matrix<Source>& m) {
  return m.unaryExpr([](const Source& x) { return Target(x); });
}

/// Exact Gauss-Jordan inverse; throws SingularMatrix.
template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::SingularMatrix, "inverse of a non-square matrix");
  Matrix<Scalar> a = m;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Scalar p = a(col, col).inverse();
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || is_zero(a(i, col))) continue;
      const Scalar f = a(i, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

template <class Scalar>
bool is_invertible(const Matrix<Scalar>& m) {
  try {
    inverse(m);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularMatrix) return false;
    throw;
  }
}

/// Reduced row echelon form in place; returns pivot columns in order.
template <class Scalar>
std::vector<Eigen::Index> rref(Matrix<Scalar>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const Scalar inv = a(row, col).inverse();
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const Scalar f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Solves A x = b exactly, setting free variables to zero. Empty when the
/// system is inconsistent.
template <class Scalar>
std::optional<Vector<Scalar>> solve_canonical(const Matrix<Scalar>& A, const Vector<Scalar>& b) {
  Matrix<Scalar> aug(A.rows(), A.cols() + 1);
  aug << A, b;
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(A.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), A.cols());
  return x;
}

/// The permutation matrix with ones on the anti-diagonal.
template <class Scalar>
Matrix<Scalar> anti_diagonal(Eigen::Index n) {
  Matrix<Scalar> s = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) s(i, n - 1 - i) = Scalar(1);
  return s;
}

}  // namespace bdcoh
