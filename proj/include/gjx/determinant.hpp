#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gjx/error.hpp"
#include "gjx/matrix.hpp"
#include "gjx/rational.hpp"

namespace gjx {

inline constexpr std::size_t kDefaultOracleLimit = 10;

/// Determinant by cofactor expansion along the first row, recursively.
///
/// Sub-determinants are memoised by the set of columns still in play (the
/// rows are always the trailing ones), so the cost is O(n 2^n) instead of
/// O(n!). The arithmetic is still plain Laplace expansion; nothing here
/// shares code with det_bareiss.
inline Rational det_laplace(const Matrix& a, std::size_t limit = kDefaultOracleLimit) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  const std::size_t n = a.rows();
  if (n > limit || n >= 32) {
    throw OracleLimit("det_laplace: side " + std::to_string(n) + " exceeds limit " +
                      std::to_string(limit));
  }

  std::vector<std::optional<Rational>> memo(std::size_t{1} << n);
  // det of rows (n - popcount(mask) + 1)..n restricted to the columns in mask.
  auto expand = [&](auto&& self, std::uint32_t mask) -> Rational {
    if (mask == 0) return Rational(1);
    auto& slot = memo[mask];
    if (slot) return *slot;
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    const std::size_t row = n - size + 1;
    Rational sum;
    int position = 0;
    for (std::size_t col = 1; col <= n; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << (col - 1);
      if (!(mask & bit)) continue;
      const Rational& entry = a(row, col);
      if (!entry.is_zero()) {
        Rational term = entry * self(self, mask & ~bit);
        if (position % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      ++position;
    }
    slot = sum;
    return sum;
  };
  return expand(expand, static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Rows are first scaled to integers by the lcm of their denominators, the
/// integer determinant is computed with exact divisions only, and the scale
/// factors are divided back out at the end.
inline Rational det_bareiss(const Matrix& a) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  const std::size_t n = a.rows();

  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class den = a(i + 1, j + 1).denominator();
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a(i + 1, j + 1);
      m[i][j] = x.numerator() * (row_lcm / x.denominator());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return Rational(0);
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  mpz_class det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

}  // namespace gjx
