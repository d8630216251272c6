#pragma once

// Closed-form minor quotients for the Gauss-Jordan pivots, intermediate
// matrices A^(2k) and operation matrices G_q. Every value is computed from
// minors of the ORIGINAL matrix only, never from an intermediate state.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gjx/engine.hpp"
#include "gjx/error.hpp"
#include "gjx/matrix.hpp"
#include "gjx/minors.hpp"

namespace gjx {

/// Deliberate formula defects, used to prove the verifier can fail.
enum class FormulaMutation {
  none,
  flip_upper_sign,     // negate the upper branch (i <= k) of the entry formula
  invert_pivot_ratio,  // pivot as m_k / m_{k+1}
};

/// Evaluates the closed forms for one matrix, caching principal minors.
class MinorFormulas {
 public:
  explicit MinorFormulas(const Matrix& a, FormulaMutation mutation = FormulaMutation::none)
      : a_(a), mutation_(mutation), principal_(a.min_dim() + 1) {}

  const Matrix& matrix() const noexcept { return a_; }

  /// m_k, with m_0 = 1.
  const Rational& principal(std::size_t k) const {
    if (k >= principal_.size()) {
      throw DimensionError("principal minor order " + std::to_string(k) + " exceeds " +
                           a_.shape());
    }
    if (!principal_[k]) principal_[k] = principal_minor(a_, k);
    return *principal_[k];
  }

  /// a^(2k)_{k+1,k+1} = m_{k+1} / m_k.
  Rational pivot(std::size_t k) const {
    const Rational& lower = nonzero_principal(k);
    const Rational& upper = principal(k + 1);
    if (mutation_ == FormulaMutation::invert_pivot_ratio) {
      if (upper.is_zero()) throw DivisionByZero("m_" + std::to_string(k + 1) + " = 0");
      return lower / upper;
    }
    return upper / lower;
  }

  /// Predicted a^(2k)_{ij}.
  Rational entry(std::size_t k, std::size_t i, std::size_t j) const {
    check_entry(k, i, j);
    if (j <= k) return Rational(i == j ? 1 : 0);
    const Rational& mk = nonzero_principal(k);
    if (i <= k) {
      // (-1)^{k+i} m^{1..k}_{1..i-1,i+1..k,j} / m_k
      Rational value = upper_minor(k, i, j) / mk;
      bool negate = (k + i) % 2 == 1;
      if (mutation_ == FormulaMutation::flip_upper_sign) negate = !negate;
      return negate ? -value : value;
    }
    // m^{1..k,i}_{1..k,j} / m_k
    return bordered_minor(k, i, j) / mk;
  }

  /// Predicted A^(2k); k = 0 gives A itself.
  Matrix intermediate(std::size_t k) const {
    Matrix predicted(a_.rows(), a_.cols());
    for (std::size_t i = 1; i <= a_.rows(); ++i) {
      for (std::size_t j = 1; j <= a_.cols(); ++j) predicted(i, j) = entry(k, i, j);
    }
    return predicted;
  }

  /// Predicted G_q, q >= 1.
  Matrix op_matrix(std::size_t q) const {
    if (q < 1) throw DimensionError("operation matrices are numbered from 1");
    const std::size_t k = (q - 1) / 2;
    if (k + 1 > a_.min_dim()) {
      throw DimensionError("no operation matrix G_" + std::to_string(q) + " for " +
                           a_.shape());
    }
    Matrix g = Matrix::identity(a_.rows());
    const std::size_t p = k + 1;
    const Rational& mk = nonzero_principal(k);
    if (q % 2 == 1) {
      const Rational& next = principal(k + 1);
      if (next.is_zero()) throw DivisionByZero("m_" + std::to_string(k + 1) + " = 0");
      g(p, p) = mk / next;
      return g;
    }
    // Precedence: diagonal, then zero outside column k+1, then the minor branches.
    for (std::size_t i = 1; i <= a_.rows(); ++i) {
      if (i == p) continue;
      if (i <= k) {
        Rational value = upper_minor(k, i, p) / mk;
        g(i, p) = (k + i + 1) % 2 == 1 ? -value : value;
      } else {
        g(i, p) = -(bordered_minor(k, i, p) / mk);
      }
    }
    return g;
  }

  /// m^{1..k,i}_{1..k,j}.
  Rational bordered_minor(std::size_t k, std::size_t i, std::size_t j) const {
    const IndexList lead = IndexList::range(1, k);
    return minor(a_, lead.with(i), lead.with(j));
  }

  /// m^{1..k}_{1..i-1,i+1..k,j}, for 1 <= i <= k < j.
  Rational upper_minor(std::size_t k, std::size_t i, std::size_t j) const {
    std::vector<std::size_t> cols;
    for (std::size_t c = 1; c <= k; ++c) {
      if (c != i) cols.push_back(c);
    }
    cols.push_back(j);
    return minor(a_, IndexList::range(1, k), IndexList(std::move(cols)));
  }

 private:
  const Rational& nonzero_principal(std::size_t k) const {
    const Rational& mk = principal(k);
    if (mk.is_zero()) throw DivisionByZero("m_" + std::to_string(k) + " = 0");
    return mk;
  }

  void check_entry(std::size_t k, std::size_t i, std::size_t j) const {
    if (k >= a_.min_dim() || i < 1 || i > a_.rows() || j < 1 || j > a_.cols()) {
      throw DimensionError("entry (k=" + std::to_string(k) + ", i=" + std::to_string(i) +
                           ", j=" + std::to_string(j) + ") outside " + a_.shape());
    }
  }

  const Matrix& a_;
  FormulaMutation mutation_;
  mutable std::vector<std::optional<Rational>> principal_;
};

inline Rational pivot_formula(const Matrix& a, std::size_t k,
                              FormulaMutation mutation = FormulaMutation::none) {
  return MinorFormulas(a, mutation).pivot(k);
}

inline Rational entry_formula(const Matrix& a, std::size_t k, std::size_t i, std::size_t j,
                              FormulaMutation mutation = FormulaMutation::none) {
  return MinorFormulas(a, mutation).entry(k, i, j);
}

inline Matrix intermediate_formula(const Matrix& a, std::size_t k,
                                   FormulaMutation mutation = FormulaMutation::none) {
  return MinorFormulas(a, mutation).intermediate(k);
}

inline Matrix opmatrix_formula(const Matrix& a, std::size_t q) {
  return MinorFormulas(a).op_matrix(q);
}

/// m_{k+1} = a_11 * a^(2)_22 * ... * a^(2k)_{k+1,k+1}, pivots read from `t`.
inline bool lemma_product_check(const Matrix& a, std::size_t k, const Trace& t) {
  if (k >= t.rank()) return false;
  Rational product(1);
  for (std::size_t l = 0; l <= k; ++l) product *= t.pivot(l);
  return principal_minor(a, k + 1) == product;
}

/// One engine-vs-formula comparison. `step` is the level k for intermediate
/// entries and pivots, and the ordinal q for operation-matrix entries.
struct Comparison {
  std::size_t step;
  std::size_t row;
  std::size_t col;
  Rational engine;
  Rational formula;
  bool match;
};

struct ProductCheck {
  std::size_t k;
  Rational principal_minor;
  Rational pivot_product;
  bool holds;
};

struct VerifyReport {
  Matrix input;
  std::size_t rank;
  std::vector<Comparison> comparisons;
  std::vector<Comparison> op_comparisons;
  std::vector<Comparison> pivot_comparisons;
  std::vector<ProductCheck> product_checks;
  bool all_match;

  /// Describes the first failing record, or nothing when all match.
  std::optional<std::string> first_mismatch() const {
    auto describe = [](const char* what, const char* step_name, const Comparison& c) {
      return std::string(what) + " " + step_name + "=" + std::to_string(c.step) +
             " i=" + std::to_string(c.row) + " j=" + std::to_string(c.col) +
             ": engine " + c.engine.str() + ", formula " + c.formula.str();
    };
    for (const auto& c : comparisons) {
      if (!c.match) return describe("intermediate", "k", c);
    }
    for (const auto& c : op_comparisons) {
      if (!c.match) return describe("operation", "q", c);
    }
    for (const auto& c : pivot_comparisons) {
      if (!c.match) return describe("pivot", "k", c);
    }
    for (const auto& l : product_checks) {
      if (!l.holds) {
        return "pivot product k=" + std::to_string(l.k) + ": m_" +
               std::to_string(l.k + 1) + " = " + l.principal_minor.str() +
               ", product " + l.pivot_product.str();
      }
    }
    return std::nullopt;
  }
};

/// Compares every entry of A^(2k) (k < r) and every G_q (q <= 2r) in `t`
/// with the closed forms, together with pivots and pivot products.
inline VerifyReport verify_trace(const Trace& t,
                                 FormulaMutation mutation = FormulaMutation::none) {
  const Matrix& a = t.input();
  MinorFormulas formulas(a, mutation);
  VerifyReport report{a, t.rank(), {}, {}, {}, {}, true};
  auto record = [&](std::vector<Comparison>& out, std::size_t step, std::size_t i,
                    std::size_t j, const Rational& engine, Rational formula) {
    bool match = engine == formula;
    report.all_match = report.all_match && match;
    out.push_back(Comparison{step, i, j, engine, std::move(formula), match});
  };

  Rational product(1);
  for (std::size_t k = 0; k < t.rank(); ++k) {
    const Matrix& state = t.state(2 * k);
    for (std::size_t i = 1; i <= a.rows(); ++i) {
      for (std::size_t j = 1; j <= a.cols(); ++j) {
        record(report.comparisons, k, i, j, state(i, j), formulas.entry(k, i, j));
      }
    }
    record(report.pivot_comparisons, k, k + 1, k + 1, t.pivot(k), formulas.pivot(k));

    product *= t.pivot(k);
    const Rational& mk1 = formulas.principal(k + 1);
    bool holds = mk1 == product;
    report.all_match = report.all_match && holds;
    report.product_checks.push_back(ProductCheck{k, mk1, product, holds});
  }

  for (const Step& s : t.steps()) {
    Matrix predicted = formulas.op_matrix(s.q);
    for (std::size_t i = 1; i <= a.rows(); ++i) {
      for (std::size_t j = 1; j <= a.rows(); ++j) {
        record(report.op_comparisons, s.q, i, j, s.op(i, j), predicted(i, j));
      }
    }
  }
  return report;
}

/// Eliminates `a` (ZeroPivot propagates) and verifies the trace.
inline VerifyReport verify_trace(const Matrix& a,
                                 FormulaMutation mutation = FormulaMutation::none) {
  return verify_trace(eliminate(a), mutation);
}

}  // namespace gjx
