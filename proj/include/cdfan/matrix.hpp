#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cdfan {

/// Dense matrix over exact rationals. Row-major.
/// Elimination uses first-nonzero pivoting, so every derived object
/// (rank profiles, kernels, solutions) is deterministic.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_) if (x != 0) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (o(k, j) == 0) continue;
          r(i, j) += a * o(k, j);
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Matrix scaled(const Rational& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    assert(v.size() == cols_);
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix submatrix(const std::vector<std::size_t>& row_ids,
                   const std::vector<std::size_t>& col_ids) const {
    Matrix r(row_ids.size(), col_ids.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i)
      for (std::size_t j = 0; j < col_ids.size(); ++j)
        r(i, j) = (*this)(row_ids[i], col_ids[j]);
    return r;
  }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  std::vector<Rational> column_vector(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j].size() == rows);
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  /// Horizontal concatenation [A | B].
  static Matrix hcat(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows());
    Matrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r) swap_rows(p, r);
      Rational inv = 1 / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const Rational f = (*this)(i, c);
        if (f == 0) continue;
        for (std::size_t j = c; j < cols_; ++j)
          if ((*this)(r, j) != 0) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.rref().size();
  }

  /// Basis of the kernel, one column per free variable (ascending column
  /// index), with the free coordinate set to 1.
  Matrix kernel_basis() const {
    Matrix red = *this;
    std::vector<std::size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(cols_, free_cols.size());
    for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
      std::size_t fc = free_cols[fj];
      k(fc, fj) = 1;
      for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        k(pivots[pi], fj) = -red(pi, fc);
    }
    return k;
  }

  /// Solve A X = B for all columns of B at once. Returns the solution with
  /// free variables set to zero, or nullopt if any column is inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const {
    assert(rows_ == b.rows());
    Matrix aug = hcat(*this, b);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && aug(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r) aug.swap_rows(p, r);
      Rational inv = 1 / aug(r, c);
      for (std::size_t j = c; j < aug.cols(); ++j) aug(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const Rational f = aug(i, c);
        if (f == 0) continue;
        for (std::size_t j = c; j < aug.cols(); ++j)
          if (aug(r, j) != 0) aug(i, j) -= f * aug(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    // Consistency: no leading entry in the augmented block.
    for (std::size_t i = r; i < rows_; ++i)
      for (std::size_t j = cols_; j < aug.cols(); ++j)
        if (aug(i, j) != 0) return std::nullopt;
    Matrix x(cols_, b.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      for (std::size_t j = 0; j < b.cols(); ++j)
        x(pivots[pi], j) = aug(pi, cols_ + j);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto sol = solve(identity(rows_));
    if (!sol) return std::nullopt;
    // solve() succeeds on singular square systems when consistent; confirm.
    if ((*this) * (*sol) == identity(rows_)) return sol;
    return std::nullopt;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Maintains a row-echelon spanning set for incremental rank queries.
class IncrementalSpan {
public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }

  bool contains(const std::vector<Rational>& v) const {
    return reduce(v).empty();
  }

  /// Adds v to the span; returns true if the rank grew.
  bool add(const std::vector<Rational>& v) {
    std::vector<Rational> red = reduce(v);
    if (red.empty()) return false;
    std::size_t p = 0;
    while (red[p] == 0) ++p;
    Rational inv = 1 / red[p];
    for (auto& x : red) x *= inv;
    rows_.push_back(std::move(red));
    pivot_.push_back(p);
    return true;
  }

private:
  // Returns the reduction of v against stored rows; empty vector if v is in the span.
  std::vector<Rational> reduce(const std::vector<Rational>& v) const {
    assert(v.size() == dim_);
    std::vector<Rational> w = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = w[pivot_[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (rows_[k][j] != 0) w[j] -= f * rows_[k][j];
    }
    for (const auto& x : w)
      if (x != 0) return w;
    return {};
  }

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivot_;
};

} // namespace cdfan
