#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgr/error.hpp"
#include "qgr/field.hpp"

namespace qgr {

// Dense row-major matrix. Arithmetic lives in the free functions below, which
// take the field explicitly.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <ExactField F>
using FieldMatrix = Matrix<typename F::Elem>;

template <ExactField F>
FieldMatrix<F> zero_matrix(const F& f, std::size_t rows, std::size_t cols) {
  return FieldMatrix<F>(rows, cols, f.zero());
}

template <ExactField F>
FieldMatrix<F> identity_matrix(const F& f, std::size_t n) {
  auto m = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <ExactField F>
FieldMatrix<F> multiply(const F& f, const FieldMatrix<F>& a, const FieldMatrix<F>& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix shape mismatch in product");
  auto out = zero_matrix(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  if (m.rows() * m.cols() == 0) return Matrix<T>(m.cols(), m.rows(), T{});
  Matrix<T> out(m.cols(), m.rows(), m(0, 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

// [a | b]
template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.rows() != b.rows()) throw ValidationError("row count mismatch in concatenation");
  Matrix<T> out(a.rows(), a.cols() + b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in order.
template <ExactField F>
std::vector<std::size_t> row_reduce(const F& f, FieldMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const auto inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <ExactField F>
std::size_t rank(const F& f, FieldMatrix<F> m) {
  // Forward elimination only.
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const auto inv = f.inv(m(row, col));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (f.is_zero(m(i, col))) continue;
      const auto factor = f.mul(m(i, col), inv);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    ++row;
  }
  return row;
}

/// Basis of the column space in reduced column echelon form: in column j the
/// first nonzero entry from the top (the pivot row) is 1, pivot rows increase
/// with j, and every other column vanishes on each pivot row. This is the
/// canonical representative of the subspace.
template <ExactField F>
FieldMatrix<F> column_echelon(const F& f, const FieldMatrix<F>& spanning) {
  auto t = transpose(spanning);
  const auto pivots = row_reduce(f, t);
  auto out = zero_matrix(f, spanning.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < spanning.rows(); ++i) out(i, j) = t(j, i);
  return out;
}

// Pivot row of each column of a reduced column echelon basis.
template <ExactField F>
std::vector<std::size_t> echelon_pivots(const F& f, const FieldMatrix<F>& basis) {
  std::vector<std::size_t> pivots;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    std::size_t i = 0;
    while (i < basis.rows() && f.is_zero(basis(i, j))) ++i;
    pivots.push_back(i);
  }
  return pivots;
}

template <ExactField F>
bool is_reduced_column_echelon(const F& f, const FieldMatrix<F>& basis) {
  const auto pivots = echelon_pivots(f, basis);
  for (std::size_t j = 0; j < pivots.size(); ++j) {
    if (pivots[j] == basis.rows()) return false;  // zero column
    if (j > 0 && pivots[j] <= pivots[j - 1]) return false;
    if (basis(pivots[j], j) != f.one()) return false;
    for (std::size_t k = 0; k < basis.cols(); ++k)
      if (k != j && !f.is_zero(basis(pivots[j], k))) return false;
  }
  return true;
}

/// Columns spanning {x : m x = 0}.
template <ExactField F>
FieldMatrix<F> nullspace(const F& f, FieldMatrix<F> m) {
  const auto pivots = row_reduce(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  auto out = zero_matrix(f, m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], k) = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = f.neg(m(r, free[k]));
  }
  return out;
}

// Convert entrywise from rationals.
template <ExactField F>
FieldMatrix<F> from_rational_matrix(const F& f, const Matrix<Rational>& m) {
  auto out = zero_matrix(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f.from_rational(m(i, j));
  return out;
}

}  // namespace qgr
