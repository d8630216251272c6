#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gjx/error.hpp"
#include "gjx/rational.hpp"

namespace gjx {

/// Dense m x n matrix of rationals. All indexing is 1-based; the 0-based
/// row-major storage never leaks through the interface.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) {
      throw DimensionError("matrix dimensions must be at least 1x1");
    }
    data_.resize(rows * cols);
  }

  Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : Matrix(from_rows(std::vector<std::vector<Rational>>(rows.begin(), rows.end()))) {}

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows.front().empty()) {
      throw DimensionError("matrix needs at least one row and one column");
    }
    Matrix result(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != result.cols_) throw DimensionError("ragged rows");
      for (std::size_t j = 0; j < result.cols_; ++j) {
        result.data_[i * result.cols_ + j] = rows[i][j];
      }
    }
    return result;
  }

  static Matrix identity(std::size_t n) {
    Matrix result(n, n);
    for (std::size_t i = 1; i <= n; ++i) result(i, i) = 1;
    return result;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::size_t min_dim() const noexcept { return rows_ < cols_ ? rows_ : cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[(i - 1) * cols_ + (j - 1)];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[(i - 1) * cols_ + (j - 1)];
  }

  const Rational& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (*this)(i, j);
  }
  Rational& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return (*this)(i, j);
  }

  std::span<const Rational> entries() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  /// True when rows `first..rows()` are entirely zero.
  bool rows_zero_from(std::size_t first) const {
    for (std::size_t i = first; i <= rows_; ++i) {
      for (std::size_t j = 1; j <= cols_; ++j) {
        if (!(*this)(i, j).is_zero()) return false;
      }
    }
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 1; j <= cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 1; i <= rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 1; i <= rows_; ++i) {
      for (std::size_t j = 1; j <= cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 1; i <= a.rows_; ++i) {
      for (std::size_t l = 1; l <= a.cols_; ++l) {
        const Rational& x = a(i, l);
        if (x.is_zero()) continue;
        for (std::size_t j = 1; j <= b.cols_; ++j) {
          if (!b(l, j).is_zero()) c(i, j) += x * b(l, j);
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 1; i <= m.rows_; ++i) {
      os << (i > 1 ? ", [" : "[");
      for (std::size_t j = 1; j <= m.cols_; ++j) os << (j > 1 ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside " + shape());
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Strictly increasing list of 1-based indices addressing rows or columns.
class IndexList {
 public:
  IndexList() = default;
  IndexList(std::initializer_list<std::size_t> indices)
      : IndexList(std::vector<std::size_t>(indices)) {}
  explicit IndexList(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    for (std::size_t p = 0; p < indices_.size(); ++p) {
      if (indices_[p] < 1) throw DimensionError("indices are 1-based");
      if (p > 0 && indices_[p] <= indices_[p - 1]) {
        throw DimensionError("index list must be strictly increasing");
      }
    }
  }

  /// first, first+1, ..., last (empty when last < first).
  static IndexList range(std::size_t first, std::size_t last) {
    std::vector<std::size_t> v;
    for (std::size_t i = first; i <= last; ++i) v.push_back(i);
    return IndexList(std::move(v));
  }

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t operator[](std::size_t p) const { return indices_[p]; }
  std::size_t back() const { return indices_.back(); }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  const std::vector<std::size_t>& values() const noexcept { return indices_; }

  /// This list with `index` appended; it must exceed the current last entry.
  IndexList with(std::size_t index) const {
    std::vector<std::size_t> v = indices_;
    v.push_back(index);
    return IndexList(std::move(v));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t p = 0; p < indices_.size(); ++p) {
      if (p > 0) s += ',';
      s += std::to_string(indices_[p]);
    }
    return s + ")";
  }

  friend bool operator==(const IndexList&, const IndexList&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// The k x k submatrix selecting `rows` and `cols` in the given order.
inline Matrix submatrix(const Matrix& a, const IndexList& rows, const IndexList& cols) {
  if (rows.size() != cols.size()) {
    throw DimensionError("row list " + rows.str() + " and column list " + cols.str() +
                         " differ in length");
  }
  if (rows.empty()) throw DimensionError("empty index list");
  if (rows.back() > a.rows() || cols.back() > a.cols()) {
    throw DimensionError("indices " + rows.str() + "x" + cols.str() + " outside " +
                         a.shape());
  }
  Matrix s(rows.size(), cols.size());
  for (std::size_t p = 0; p < rows.size(); ++p) {
    for (std::size_t q = 0; q < cols.size(); ++q) s(p + 1, q + 1) = a(rows[p], cols[q]);
  }
  return s;
}

/// Calls `fn(IndexList)` for every k-subset of {1..n} in lexicographic order.
/// Stops early when `fn` returns true; returns whether it did.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k == 0 || k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{1});
  while (true) {
    if (fn(IndexList(idx))) return true;
    std::size_t p = k;
    while (p > 0 && idx[p - 1] == n - k + p) --p;
    if (p == 0) return false;
    ++idx[p - 1];
    for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace gjx
