#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gjx/engine.hpp"
#include "gjx/error.hpp"
#include "gjx/matrix.hpp"
#include "gjx/minors.hpp"

namespace gjx {

/// Bijection on {1..size}. As a row permutation, row i of the permuted
/// matrix is row (*this)(i) of the original; as a column permutation,
/// column j of the permuted matrix is column (*this)(j).
class Permutation {
 public:
  explicit Permutation(std::size_t size) : mapping_(size) {
    std::iota(mapping_.begin(), mapping_.end(), std::size_t{1});
  }

  static Permutation from_mapping(std::vector<std::size_t> mapping) {
    std::vector<bool> seen(mapping.size() + 1, false);
    for (std::size_t v : mapping) {
      if (v < 1 || v > mapping.size() || seen[v]) {
        throw DimensionError("mapping is not a bijection of 1.." +
                             std::to_string(mapping.size()));
      }
      seen[v] = true;
    }
    Permutation p(0);
    p.mapping_ = std::move(mapping);
    return p;
  }

  std::size_t size() const noexcept { return mapping_.size(); }
  std::size_t operator()(std::size_t i) const { return mapping_[i - 1]; }
  const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < mapping_.size(); ++i) {
      if (mapping_[i] != i + 1) return false;
    }
    return true;
  }

  /// Exchanges the images of positions a and b.
  void swap(std::size_t a, std::size_t b) { std::swap(mapping_[a - 1], mapping_[b - 1]); }

  Permutation inverse() const {
    Permutation inv(size());
    for (std::size_t i = 1; i <= size(); ++i) inv.mapping_[(*this)(i) - 1] = i;
    return inv;
  }

  /// P with P * A = rows of A permuted: P(i, map(i)) = 1.
  Matrix row_matrix() const {
    Matrix p(size(), size());
    for (std::size_t i = 1; i <= size(); ++i) p(i, (*this)(i)) = 1;
    return p;
  }

  /// Q with A * Q = columns of A permuted: Q(map(j), j) = 1.
  Matrix column_matrix() const { return row_matrix().transpose(); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < mapping_.size(); ++i) {
      if (i > 0) s += ' ';
      s += std::to_string(mapping_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

enum class SwapKind { row, col };

struct SwapRecord {
  std::size_t level;  // k: the swap moves an entry to pivot position (k+1,k+1)
  SwapKind kind;
  std::size_t from;
  std::size_t to;
};

struct ArrangeResult {
  Permutation row_perm;
  Permutation col_perm;
  Matrix arranged;
  std::vector<SwapRecord> swaps;
};

inline constexpr std::size_t kArrangementCheckLimit = 8;

/// |a_ij| <= |a_11| everywhere, and every bordered minor
/// |m^{1..k,i}_{1..k,j}| <= |m_{k+1}| for 1 <= k < min(m,n), i, j > k.
inline bool is_properly_arranged(const Matrix& a) {
  if (a.min_dim() > kArrangementCheckLimit) {
    throw OracleLimit("is_properly_arranged: min dimension " +
                      std::to_string(a.min_dim()) + " exceeds " +
                      std::to_string(kArrangementCheckLimit));
  }
  if (a.is_zero()) throw ZeroMatrix();

  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (compare_abs(a(i, j), a(1, 1)) > 0) return false;
    }
  }
  for (std::size_t k = 1; k < a.min_dim(); ++k) {
    const IndexList lead = IndexList::range(1, k);
    const Rational principal = principal_minor(a, k + 1);
    for (std::size_t i = k + 1; i <= a.rows(); ++i) {
      for (std::size_t j = k + 1; j <= a.cols(); ++j) {
        if (compare_abs(minor(a, lead.with(i), lead.with(j)), principal) > 0) return false;
      }
    }
  }
  return true;
}

/// Greedy complete pivoting: at each level k, bring the entry of largest
/// magnitude in the lower-right block of A^(2k) to (k+1,k+1). Ties go to the
/// smallest row, then the smallest column. Stops once the block is zero.
///
/// Block entries of A^(2k) are bordered minors divided by m_k, so this
/// maximises each bordered minor at its level. Exchanges at later levels
/// only permute indices > k+1 and leave earlier levels intact.
inline ArrangeResult arrange(const Matrix& a) {
  if (a.is_zero()) throw ZeroMatrix();
  ArrangeResult result{Permutation(a.rows()), Permutation(a.cols()), a, {}};
  Matrix& working = result.arranged;
  Matrix state = a;  // A^(2k) of `working`

  for (std::size_t k = 0; k < a.min_dim(); ++k) {
    const std::size_t p = k + 1;
    std::size_t best_i = p;
    std::size_t best_j = p;
    for (std::size_t i = p; i <= a.rows(); ++i) {
      for (std::size_t j = p; j <= a.cols(); ++j) {
        if (compare_abs(state(i, j), state(best_i, best_j)) > 0) {
          best_i = i;
          best_j = j;
        }
      }
    }
    if (state(best_i, best_j).is_zero()) break;

    if (best_i != p) {
      working.swap_rows(p, best_i);
      state.swap_rows(p, best_i);
      result.row_perm.swap(p, best_i);
      result.swaps.push_back(SwapRecord{k, SwapKind::row, p, best_i});
    }
    if (best_j != p) {
      working.swap_cols(p, best_j);
      state.swap_cols(p, best_j);
      result.col_perm.swap(p, best_j);
      result.swaps.push_back(SwapRecord{k, SwapKind::col, p, best_j});
    }
    state = step_even(step_odd(state, k).result, k).result;
  }
  return result;
}

/// |a^(2k)_{k+1,k+1}| >= |a^(2k)_ij| for all k < r and i, j > k.
inline bool pivot_dominance_check(const Trace& t) {
  for (std::size_t k = 0; k < t.rank(); ++k) {
    const Matrix& state = t.state(2 * k);
    const Rational& pivot = state(k + 1, k + 1);
    for (std::size_t i = k + 1; i <= state.rows(); ++i) {
      for (std::size_t j = k + 1; j <= state.cols(); ++j) {
        if (compare_abs(state(i, j), pivot) > 0) return false;
      }
    }
  }
  return true;
}

}  // namespace gjx
