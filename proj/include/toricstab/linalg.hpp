#pragma once

// Exact dense linear algebra over a field (Rat in practice). Every routine
// pivots on the first nonzero entry: with exact arithmetic there is no
// conditioning to protect, only zero to avoid.

#include "toricstab/errors.hpp"
#include "toricstab/rational.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace toricstab {

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
template <typename Scalar>
std::vector<Eigen::Index> row_reduce(Mat<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  Mat<typename Derived::Scalar> m = a;
  return static_cast<Eigen::Index>(row_reduce(m).size());
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  Mat<Scalar> m = a;
  Scalar det(1);
  const Eigen::Index n = m.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Scalar f = m(r, c) / m(c, c);
      m.row(r).tail(n - c) -= f * m.row(c).tail(n - c);
    }
  }
  return det;
}

/// Columns form a basis of {x : a x = 0}.
template <typename Derived>
Mat<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> m = a;
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Mat<Scalar> basis(m.cols(), m.cols() - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec<Scalar> v = Vec<Scalar>::Zero(m.cols());
    v(free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -m(static_cast<Eigen::Index>(r), free);
    basis.col(out++) = v;
  }
  return basis;
}

/// Exact solution of a x = b for square invertible a.
template <typename DerivedA, typename DerivedB>
Vec<typename DerivedA::Scalar> solve_linear(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error(ErrorKind::InvalidArgument, "solve_linear: shape mismatch");
  Mat<Scalar> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "solve_linear: matrix is singular");
    if (p != c) aug.row(p).swap(aug.row(c));
    const Scalar inv = Scalar(1) / aug(c, c);
    aug.row(c) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || aug(r, c) == 0) continue;
      const Scalar f = aug(r, c);
      aug.row(r) -= f * aug.row(c);
    }
  }
  return aug.col(n);
}

/// Every row reads 0 = 0: any scalar solves the system.
struct AnyS {
  bool operator==(const AnyS&) const = default;
};
/// Some row is inconsistent.
struct NoSolution {
  bool operator==(const NoSolution&) const = default;
};

template <typename Scalar>
using ScalarSolution = std::variant<NoSolution, AnyS, Scalar>;

/// Solves coeffs_k * s = rhs_k for all k with a single unknown s.
template <typename DerivedC, typename DerivedR>
ScalarSolution<typename DerivedC::Scalar> solve_overdetermined_1d(const Eigen::MatrixBase<DerivedC>& coeffs,
                                                                  const Eigen::MatrixBase<DerivedR>& rhs) {
  using Scalar = typename DerivedC::Scalar;
  if (coeffs.size() != rhs.size()) throw Error(ErrorKind::InvalidArgument, "solve_overdetermined_1d: size mismatch");
  std::optional<Scalar> s;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    if (coeffs(k) == 0) {
      if (rhs(k) != 0) return NoSolution{};
      continue;
    }
    Scalar candidate = rhs(k) / coeffs(k);
    if (s && *s != candidate) return NoSolution{};
    s = std::move(candidate);
  }
  if (!s) return AnyS{};
  return *s;
}

/// Coefficients c_0..c_degree (ascending) of the polynomial through the first
/// degree+1 points; remaining points must lie on it (DegreeMismatch otherwise).
template <typename Scalar>
Vec<Scalar> interpolate_poly(const std::vector<std::pair<Scalar, Scalar>>& points, int degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "interpolate_poly: negative degree");
  const auto m = static_cast<std::size_t>(degree) + 1;
  if (points.size() < m) throw Error(ErrorKind::InvalidArgument, "interpolate_poly: not enough points");
  Mat<Scalar> vandermonde(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  Vec<Scalar> ys(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    Scalar pw(1);
    for (std::size_t j = 0; j < m; ++j) {
      vandermonde(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = pw;
      pw *= points[i].first;
    }
    ys(static_cast<Eigen::Index>(i)) = points[i].second;
  }
  Vec<Scalar> coeffs;
  try {
    coeffs = solve_linear(vandermonde, ys);
  } catch (const Error&) {
    throw Error(ErrorKind::InvalidArgument, "interpolate_poly: abscissae are not distinct");
  }
  for (std::size_t i = m; i < points.size(); ++i) {
    Scalar value(0);
    for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) value = value * points[i].first + coeffs(j);
    if (value != points[i].second)
      throw Error(ErrorKind::DegreeMismatch, "interpolate_poly: extra point does not lie on the interpolant");
  }
  return coeffs;
}

/// Horner evaluation of ascending coefficients.
template <typename Scalar>
Scalar evaluate_poly(const Vec<Scalar>& coeffs, const Scalar& t) {
  Scalar value(0);
  for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) value = value * t + coeffs(j);
  return value;
}

}  // namespace toricstab
