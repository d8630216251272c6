#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gjx/error.hpp"
#include "gjx/matrix.hpp"
#include "gjx/minors.hpp"

namespace gjx {

/// One Gauss-Jordan step: the operation matrix G_q and the state A^(q) it
/// produces from A^(q-1).
struct Step {
  std::size_t q;
  Matrix op;
  Matrix result;

  bool is_odd() const noexcept { return q % 2 == 1; }
  /// The level k with q = 2k+1 (odd) or q = 2k+2 (even).
  std::size_t level() const noexcept { return (q - 1) / 2; }
};

/// Full record of an elimination: 2r steps for a matrix of rank r.
class Trace {
 public:
  Trace(Matrix input, std::vector<Step> steps, std::size_t rank)
      : input_(std::move(input)), steps_(std::move(steps)), rank_(rank) {}

  const Matrix& input() const noexcept { return input_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t rank() const noexcept { return rank_; }

  /// A^(q); A^(0) is the input.
  const Matrix& state(std::size_t q) const {
    if (q > steps_.size()) {
      throw DimensionError("trace has no state " + std::to_string(q));
    }
    return q == 0 ? input_ : steps_[q - 1].result;
  }
  const Matrix& final_state() const { return state(steps_.size()); }

  /// The pivot a^(2k)_{k+1,k+1} read from the trace.
  const Rational& pivot(std::size_t k) const { return state(2 * k)(k + 1, k + 1); }

 private:
  Matrix input_;
  std::vector<Step> steps_;
  std::size_t rank_;
};

namespace detail {
inline void check_level(const Matrix& current, std::size_t k) {
  if (k + 1 > current.min_dim()) {
    throw DimensionError("level k=" + std::to_string(k) + " outside " + current.shape());
  }
}
}  // namespace detail

/// G_{2k+1}: scale row k+1 by the reciprocal of the pivot.
inline Step step_odd(const Matrix& current, std::size_t k) {
  detail::check_level(current, k);
  const std::size_t p = k + 1;
  const Rational& pivot = current(p, p);
  if (pivot.is_zero()) throw ZeroPivot(p);

  Matrix op = Matrix::identity(current.rows());
  op(p, p) = reciprocal(pivot);
  Matrix result = op * current;
  return Step{2 * k + 1, std::move(op), std::move(result)};
}

/// G_{2k+2}: clear column k+1 outside the (unit) pivot.
inline Step step_even(const Matrix& current, std::size_t k) {
  detail::check_level(current, k);
  const std::size_t p = k + 1;
  if (current(p, p) != Rational(1)) {
    throw PreconditionError("step_even at k=" + std::to_string(k) + " needs pivot 1, got " +
                            current(p, p).str());
  }
  Matrix op = Matrix::identity(current.rows());
  for (std::size_t i = 1; i <= current.rows(); ++i) {
    if (i != p) op(i, p) = -current(i, p);
  }
  Matrix result = op * current;
  return Step{2 * k + 2, std::move(op), std::move(result)};
}

/// Runs the Gauss-Jordan procedure on the diagonal, never exchanging rows
/// or columns. Stops at level k when the pivot is zero and rows k+1..m of
/// A^(2k) are zero (rank exhausted); throws ZeroPivot when the pivot is zero
/// but those rows are not.
inline Trace eliminate(const Matrix& a) {
  if (a.is_zero()) throw ZeroMatrix();
  std::vector<Step> steps;
  Matrix current = a;
  std::size_t k = 0;
  for (; k < a.min_dim(); ++k) {
    if (current(k + 1, k + 1).is_zero()) {
      if (current.rows_zero_from(k + 1)) break;
      throw ZeroPivot(k + 1);
    }
    Step odd = step_odd(current, k);
    Step even = step_even(odd.result, k);
    current = even.result;
    steps.push_back(std::move(odd));
    steps.push_back(std::move(even));
  }
  return Trace(a, std::move(steps), k);
}

/// G = G_{2r} ... G_1.
inline Matrix gj_product(const Trace& t) {
  Matrix g = Matrix::identity(t.input().rows());
  for (const Step& s : t.steps()) g = s.op * g;
  return g;
}

/// A^{-1} as the product of the operation matrices of a full elimination.
inline Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  if (a.is_zero()) throw Singular(0, a.rows());
  Trace t = eliminate(a);
  if (t.rank() < a.rows()) throw Singular(t.rank(), a.rows());
  return gj_product(t);
}

/// m_1, ..., m_r all non-zero.
inline bool is_diagonally_eliminable(const Matrix& a, std::size_t r) {
  if (r < 1 || r > a.min_dim()) {
    throw DimensionError("r=" + std::to_string(r) + " outside 1.." +
                         std::to_string(a.min_dim()));
  }
  for (std::size_t k = 1; k <= r; ++k) {
    if (principal_minor(a, k).is_zero()) return false;
  }
  return true;
}

}  // namespace gjx
