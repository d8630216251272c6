#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gjx {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index lists of unequal length, indices out of range, or empty shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotSquare : public DimensionError {
 public:
  NotSquare(std::size_t rows, std::size_t cols)
      : DimensionError("matrix is not square (" + std::to_string(rows) + "x" +
                       std::to_string(cols) + ")") {}
};

/// Input exceeds the size an enumerating oracle is willing to handle.
class OracleLimit : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ZeroMatrix : public Error {
 public:
  ZeroMatrix() : Error("matrix is zero (rank 0)") {}
};

class Singular : public Error {
 public:
  Singular(std::size_t rank, std::size_t n)
      : Error("matrix is singular (rank " + std::to_string(rank) + " < " +
              std::to_string(n) + ")") {}
};

/// A diagonal pivot vanished while the lower block still had non-zero rows.
class ZeroPivot : public Error {
 public:
  /// `position` is the 1-based diagonal index k+1 of the failing pivot.
  explicit ZeroPivot(std::size_t position)
      : Error("zero pivot at (" + std::to_string(position) + "," +
              std::to_string(position) + ") at level k=" +
              std::to_string(position - 1)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t level() const noexcept { return position_ - 1; }

 private:
  std::size_t position_;
};

/// A step was invoked on a matrix that does not satisfy its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gjx
