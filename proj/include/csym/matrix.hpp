#pragma once

// Dense matrices over exact fields, with the row-reduction toolkit used by
// every cohomology computation.

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "csym/error.hpp"
#include "csym/scalar.hpp"

namespace csym {

template <class T>
using Vector = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw Error(Errc::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(Errc::DimensionMismatch, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<T> column(std::size_t j) const {
    Vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const { return is_square() && *this == transpose(); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Submatrix on the given row and column index lists.
  Matrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend Vector<T> operator*(const Matrix& a, const Vector<T>& v) {
    if (a.cols_ != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    Vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

template <class T>
bool is_zero_vector(const Vector<T>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class T>
struct RrefResult {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
  Matrix<T> transform;  // transform * input == reduced
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; pivots are the leftmost possible columns.
template <class T>
RrefResult<T> rref(const Matrix<T>& input) {
  Matrix<T> a = input;
  Matrix<T> t = Matrix<T>::identity(input.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
      for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t(sel, j), t(row, j));
    }
    const T inv = T(1) / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) *= inv;
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (!t(row, j).is_zero()) t(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const T factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= factor * a(row, j);
      for (std::size_t j = 0; j < t.cols(); ++j)
        if (!t(row, j).is_zero()) t(i, j) -= factor * t(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots), std::move(t)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rank();
}

/// Standard kernel basis: one vector per free column, with a 1 there.
template <class T>
std::vector<Vector<T>> kernel_basis(const Matrix<T>& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Prepared solver for columns * x = target; reuses one elimination.
template <class T>
class SpanSolver {
 public:
  SpanSolver() = default;
  explicit SpanSolver(const Matrix<T>& columns) : cols_(columns.cols()), rows_(columns.rows()), r_(rref(columns)) {}

  std::size_t rank() const { return r_.rank(); }

  /// A solution (free variables zero), or nullopt when target is outside the span.
  std::optional<Vector<T>> solve(const Vector<T>& target) const {
    if (target.size() != rows_) throw Error(Errc::DimensionMismatch, "target length mismatch");
    const Vector<T> y = r_.transform * target;
    for (std::size_t i = r_.rank(); i < y.size(); ++i)
      if (!y[i].is_zero()) return std::nullopt;
    Vector<T> x(cols_, T(0));
    for (std::size_t i = 0; i < r_.rank(); ++i) x[r_.pivots[i]] = y[i];
    return x;
  }

 private:
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  RrefResult<T> r_;
};

template <class T>
std::optional<Vector<T>> solve_in_span(const Matrix<T>& columns, const Vector<T>& target) {
  return SpanSolver<T>(columns).solve(target);
}

struct Signature {
  std::size_t p_plus = 0;
  std::size_t p_minus = 0;
  std::size_t p_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::ostream& operator<<(std::ostream& os, const Signature& s);

/// Characteristic polynomial det(xI - M), coefficients from x^0 upward.
std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& m);

/// Inertia of a real symmetric matrix from sign variations of its
/// characteristic polynomial (all roots are real). Throws NonSymmetric.
Signature symmetric_signature(const Matrix<Rational>& m);

Matrix<GaussRat> to_gauss(const Matrix<Rational>& m);
/// Real parts, throwing NonRealEntry if any entry has a nonzero imaginary part.
Matrix<Rational> require_real(const Matrix<GaussRat>& m);

}  // namespace csym
