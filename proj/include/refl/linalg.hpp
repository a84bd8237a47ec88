#pragma once

// Exact dense linear algebra on Eigen containers: fraction-free determinants,
// rational inverses, Smith normal form and the Gram-matrix decomposition that
// drives short-vector enumeration. Everything is exact; nothing here touches
// floating point.

#include "refl/rational.hpp"

#include <Eigen/Core>

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace refl {

/// Bareiss fraction-free elimination; every intermediate is an exact Scalar.
template <typename Scalar, typename Derived>
Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return Scalar(1);

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Scalar(m(i, j));

  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = v / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Gauss-Jordan over the rationals. Throws std::domain_error when singular.
template <typename Derived>
RationalMatrix inverse(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  RationalMatrix a(n, n);
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: matrix is singular");
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      inv.row(col).swap(inv.row(pivot));
    }
    const Rational scale = 1 / a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in Smith form");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in Smith form");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in Smith form");
  return out;
}

}  // namespace detail

/// left * A * right == diagonal, with left/right unimodular and each
/// diagonal entry dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

template <typename Derived>
SmithForm smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using detail::checked_add;
  using detail::checked_mul;
  using detail::checked_sub;

  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  IntMatrix a = m.template cast<std::int64_t>();
  IntMatrix left = IntMatrix::Identity(rows, rows);
  IntMatrix right = IntMatrix::Identity(cols, cols);

  auto row_axpy = [&](Eigen::Index dst, Eigen::Index src, std::int64_t f) {
    for (Eigen::Index j = 0; j < cols; ++j) a(dst, j) = checked_sub(a(dst, j), checked_mul(f, a(src, j)));
    for (Eigen::Index j = 0; j < rows; ++j)
      left(dst, j) = checked_sub(left(dst, j), checked_mul(f, left(src, j)));
  };
  auto col_axpy = [&](Eigen::Index dst, Eigen::Index src, std::int64_t f) {
    for (Eigen::Index i = 0; i < rows; ++i) a(i, dst) = checked_sub(a(i, dst), checked_mul(f, a(i, src)));
    for (Eigen::Index i = 0; i < cols; ++i)
      right(i, dst) = checked_sub(right(i, dst), checked_mul(f, right(i, src)));
  };

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi < 0 || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      if (pi != t) {
        a.row(t).swap(a.row(pi));
        left.row(t).swap(left.row(pi));
      }
      if (pj != t) {
        a.col(t).swap(a.col(pj));
        right.col(t).swap(right.col(pj));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_axpy(i, t, a(i, t) / a(t, t));
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_axpy(j, t, a(t, j) / a(t, t));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      // Fold the offending row into the pivot row and reduce again.
      for (Eigen::Index j = 0; j < cols; ++j) a(t, j) = checked_add(a(t, j), a(bad, j));
      for (Eigen::Index j = 0; j < rows; ++j) left(t, j) = checked_add(left(t, j), left(bad, j));
    }
    if (a(t, t) < 0) {
      a.row(t) *= -1;
      left.row(t) *= -1;
    }
  }
  return {std::move(left), std::move(a), std::move(right)};
}

/// Q(x) = sum_i q(i,i) * (x_i + sum_{j>i} q(i,j) x_j)^2 for a positive-definite
/// symmetric Gram matrix. The returned matrix stores the pivots on the
/// diagonal and the elimination multipliers above it.
template <typename Derived>
RationalMatrix quadratic_decomposition(const Eigen::MatrixBase<Derived>& gram) {
  const Eigen::Index n = gram.rows();
  RationalMatrix q(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) q(i, j) = Rational(gram(i, j));

  for (Eigen::Index i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw std::domain_error("quadratic_decomposition: form is not positive definite");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (Eigen::Index k = i + 1; k < n; ++k)
      for (Eigen::Index l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) q(i, j) = 0;
  return q;
}

}  // namespace refl
