#pragma once

// Exact dense linear algebra over Q, plus a fraction-free determinant that
// works over any integral domain supplying exact division.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/multipoly.hpp"

namespace cubicforge {

using RationalVector = std::vector<Rational>;

/// Row-major rectangular matrix of canonical rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Throws InvalidArgument on ragged input.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(Errc::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector multiply(const RationalVector& v) const {
    if (v.size() != cols_) fail(Errc::InvalidArgument, "dimension mismatch in matrix-vector product");
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix m) { return rref(m).size(); }

/// Basis of the right nullspace. Each vector is integral, primitive, and has
/// its first nonzero entry positive. Basis vector i has a 1-pattern at the
/// i-th free column before normalization, so the basis is independent.
inline std::vector<RationalVector> rational_nullspace(RationalMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    auto ints = primitive_integer_vector(v);
    RationalVector out;
    out.reserve(ints.size());
    for (auto& x : ints) out.emplace_back(x);
    basis.push_back(std::move(out));
  }
  return basis;
}

/// Some solution of M·x = rhs, or nullopt when inconsistent. Free variables
/// are set to zero.
inline std::optional<RationalVector> solve_consistent(const RationalMatrix& m, const RationalVector& rhs) {
  if (rhs.size() != m.rows()) fail(Errc::InvalidArgument, "dimension mismatch in linear solve");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

/// Exact division customization point for the Bareiss determinant.
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) fail(Errc::InvariantViolation, "inexact division in fraction-free elimination");
  return *q;
}

inline bool is_zero_element(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero_element(const MultiPoly& x) { return x.is_zero(); }

inline std::size_t pivot_weight(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
inline std::size_t pivot_weight(const MultiPoly& x) { return x.size(); }

/// Determinant of a square matrix by Bareiss fraction-free elimination.
/// `one` and `zero` are the ring's identities (they carry variable lists for
/// polynomial rings).
template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> a, const T& one, const T& zero) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) fail(Errc::InvalidArgument, "determinant of a non-square matrix");
  }
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_element(a[k][k])) {
      // Prefer the sparsest nonzero pivot to limit expression swell.
      std::size_t best = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (is_zero_element(a[i][k])) continue;
        if (best == n || pivot_weight(a[i][k]) < pivot_weight(a[best][k])) best = i;
      }
      if (best == n) return zero;
      std::swap(a[k], a[best]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = k == 0 ? std::move(t) : exact_quotient(t, prev);
      }
      a[i][k] = zero;
    }
    prev = a[k][k];
  }
  T det = a[n - 1][n - 1];
  if (negate) det = -det;
  return det;
}

}  // namespace cubicforge
