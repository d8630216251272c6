#pragma once

#include <cstddef>
#include <string>

#include "gjx/determinant.hpp"
#include "gjx/error.hpp"
#include "gjx/matrix.hpp"

namespace gjx {

/// det of the submatrix on `rows` x `cols`, by cofactor expansion.
inline Rational minor(const Matrix& a, const IndexList& rows, const IndexList& cols) {
  return det_laplace(submatrix(a, rows, cols));
}

/// Leading k x k minor; 1 when k = 0.
inline Rational principal_minor(const Matrix& a, std::size_t k) {
  if (k > a.min_dim()) {
    throw DimensionError("principal minor order " + std::to_string(k) + " exceeds " +
                         a.shape());
  }
  if (k == 0) return Rational(1);
  const IndexList lead = IndexList::range(1, k);
  return minor(a, lead, lead);
}

/// Largest k such that some k x k minor is non-zero (0 for the zero matrix).
inline std::size_t rank_by_minors(const Matrix& a,
                                  std::size_t limit = kDefaultOracleLimit) {
  if (a.min_dim() > limit) {
    throw OracleLimit("rank_by_minors: min dimension " + std::to_string(a.min_dim()) +
                      " exceeds limit " + std::to_string(limit));
  }
  // If every k x k minor vanishes, so does every larger one.
  for (std::size_t k = 1; k <= a.min_dim(); ++k) {
    bool found = for_each_combination(a.rows(), k, [&](const IndexList& rows) {
      return for_each_combination(a.cols(), k, [&](const IndexList& cols) {
        return !minor(a, rows, cols).is_zero();
      });
    });
    if (!found) return k - 1;
  }
  return a.min_dim();
}

}  // namespace gjx
