#pragma once

#include <cstdint>
#include <random>

#include "gjx/matrix.hpp"

namespace gjx {

/// Seeded integer-matrix generator.
///
/// Uses std::mt19937_64 (bit-exact across standard libraries) and draws each
/// entry uniformly from [-max_abs, max_abs] by rejection sampling on the raw
/// 64-bit output, so a seed yields the same matrices on every platform.
/// Entries are drawn row by row.
class MatrixGenerator {
 public:
  explicit MatrixGenerator(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t max_abs) {
    if (max_abs <= 0) return 0;
    const std::uint64_t range = 2 * static_cast<std::uint64_t>(max_abs) + 1;
    const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw < threshold);
    return static_cast<std::int64_t>(draw % range) - max_abs;
  }

  Matrix integer_matrix(std::size_t rows, std::size_t cols, std::int64_t max_abs) {
    Matrix m(rows, cols);
    for (std::size_t i = 1; i <= rows; ++i) {
      for (std::size_t j = 1; j <= cols; ++j) m(i, j) = Rational(uniform(max_abs));
    }
    return m;
  }

  /// Product of a rows x inner and an inner x cols random matrix; its rank
  /// is at most `inner`.
  Matrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t inner,
                         std::int64_t max_abs) {
    Matrix left = integer_matrix(rows, inner, max_abs);
    Matrix right = integer_matrix(inner, cols, max_abs);
    return left * right;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gjx
