#pragma once

// Dense matrices over the exact rational field, sized for the small
// dimensions that occur here (algebra dimension at most a few thousand,
// usually at most sixteen). Plain Gaussian elimination gives rank, solving,
// inversion and nullspaces with no pivot tolerance at all.

#include "tregular/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tregular {

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<S> row(std::size_t i) const {
    return std::vector<S>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix<S> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (aik == S(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class S>
std::vector<S> operator*(const Matrix<S>& a, const std::vector<S>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<S> y(a.rows(), S(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != S(0)) y[i] += a(i, j) * x[j];
  return y;
}

namespace detail {

// In-place reduction to row echelon form; returns the pivot columns.
template <class S>
std::vector<std::size_t> row_echelon(Matrix<S>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == S(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const S inv = S(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == S(0)) continue;
      const S f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class S>
std::size_t rank(Matrix<S> m) {
  return detail::row_echelon(m).size();
}

/// One solution of A x = b, or nullopt when the system is inconsistent.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& a, const std::vector<S>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<S> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = detail::row_echelon(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<S> x(a.cols(), S(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

/// A basis of the right nullspace of A, one vector per row of the result.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> m) {
  const std::size_t n = m.cols();
  const auto pivots = detail::row_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<S> v(n, S(0));
    v[fc] = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = a.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = S(1);
  }
  const auto pivots = detail::row_echelon(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Matrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Greedily extends the (independent) rows of `have` with rows from `pool`
/// until the span is full, returning indices of the chosen pool rows.
template <class S>
std::vector<std::size_t> extend_to_full_rank(const std::vector<std::vector<S>>& have,
                                             const std::vector<std::vector<S>>& pool,
                                             std::size_t ambient_dim) {
  std::vector<std::vector<S>> rows = have;
  std::vector<std::size_t> chosen;
  auto current_rank = [&]() {
    Matrix<S> m(rows.size(), ambient_dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = rows[i][j];
    return rank(std::move(m));
  };
  std::size_t r = current_rank();
  for (std::size_t p = 0; p < pool.size() && r < ambient_dim; ++p) {
    rows.push_back(pool[p]);
    const std::size_t r2 = current_rank();
    if (r2 > r) {
      chosen.push_back(p);
      r = r2;
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

}  // namespace tregular
