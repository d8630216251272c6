#include <gtest/gtest.h>

#include "gjx/engine.hpp"
#include "gjx/minors.hpp"
#include "gjx/random.hpp"
#include "support/oracles.hpp"

namespace gjx {
namespace {

Rational q(const char* text) { return Rational::parse(text); }

const Matrix kRunning2{{2, 1}, {4, 3}};
const Matrix kRunning3{{2, 1, 1}, {4, 3, 1}, {2, 2, 3}};

TEST(StepOdd, ScalesThePivotRow) {
  Step s = step_odd(kRunning2, 0);
  EXPECT_EQ(s.q, 1u);
  EXPECT_EQ(s.op, (Matrix{{q("1/2"), 0}, {0, 1}}));
  EXPECT_EQ(s.result, (Matrix{{1, q("1/2")}, {4, 3}}));
  EXPECT_EQ(s.result, s.op * kRunning2);
}

TEST(StepOdd, UnitPivotGivesIdentity) {
  Matrix a{{1, 5}, {2, 3}};
  Step s = step_odd(a, 0);
  EXPECT_EQ(s.op, Matrix::identity(2));
  EXPECT_EQ(s.result, a);
}

TEST(StepOdd, ZeroPivot) {
  try {
    step_odd(Matrix{{0, 1}, {1, 0}}, 0);
    FAIL() << "expected ZeroPivot";
  } catch (const ZeroPivot& e) {
    EXPECT_EQ(e.position(), 1u);
    EXPECT_EQ(e.level(), 0u);
  }
  EXPECT_THROW(step_odd(kRunning2, 2), DimensionError);
}

TEST(StepEven, ClearsThePivotColumn) {
  Step s = step_even(Matrix{{1, q("1/2")}, {4, 3}}, 0);
  EXPECT_EQ(s.q, 2u);
  EXPECT_EQ(s.op, (Matrix{{1, 0}, {-4, 1}}));
  EXPECT_EQ(s.result, (Matrix{{1, q("1/2")}, {0, 1}}));
}

TEST(StepEven, BasisColumnGivesIdentity) {
  Matrix a{{1, 0, 3}, {0, 1, 4}};
  EXPECT_EQ(step_even(a, 1).op, Matrix::identity(2));
}

TEST(StepEven, SecondLevelOfRunningExample) {
  Matrix a{{1, q("1/2"), q("1/2")}, {0, 1, -1}, {0, 1, 2}};
  Step s = step_even(a, 1);
  EXPECT_EQ(s.q, 4u);
  EXPECT_EQ(s.result, (Matrix{{1, 0, 1}, {0, 1, -1}, {0, 0, 3}}));
  EXPECT_EQ(s.op, (Matrix{{1, q("-1/2"), 0}, {0, 1, 0}, {0, -1, 1}}));
}

TEST(StepEven, RequiresUnitPivot) {
  EXPECT_THROW(step_even(kRunning2, 0), PreconditionError);
}

TEST(Eliminate, Running2x2) {
  Trace t = eliminate(kRunning2);
  EXPECT_EQ(t.rank(), 2u);
  ASSERT_EQ(t.steps().size(), 4u);
  EXPECT_EQ(t.final_state(), Matrix::identity(2));
  EXPECT_EQ(gj_product(t) * kRunning2, Matrix::identity(2));
}

TEST(Eliminate, Running3x3States) {
  Trace t = eliminate(kRunning3);
  ASSERT_EQ(t.steps().size(), 6u);
  EXPECT_EQ(t.state(2), (Matrix{{1, q("1/2"), q("1/2")}, {0, 1, -1}, {0, 1, 2}}));
  EXPECT_EQ(t.state(4), (Matrix{{1, 0, 1}, {0, 1, -1}, {0, 0, 3}}));
  EXPECT_EQ(t.state(5), (Matrix{{1, 0, 1}, {0, 1, -1}, {0, 0, 1}}));
  EXPECT_EQ(t.state(6), Matrix::identity(3));
  EXPECT_EQ(t.steps()[5].op, (Matrix{{1, 0, -1}, {0, 1, 1}, {0, 0, 1}}));
}

TEST(Eliminate, IdentityHasIdentityOperations) {
  for (std::size_t n = 1; n <= 5; ++n) {
    Trace t = eliminate(Matrix::identity(n));
    EXPECT_EQ(t.steps().size(), 2 * n);
    for (const Step& s : t.steps()) EXPECT_EQ(s.op, Matrix::identity(n));
  }
}

TEST(Eliminate, RankDeficientStopsEarly) {
  Trace t = eliminate(Matrix{{1, 2}, {2, 4}});
  EXPECT_EQ(t.rank(), 1u);
  EXPECT_EQ(t.steps().size(), 2u);
  EXPECT_EQ(t.final_state(), (Matrix{{1, 2}, {0, 0}}));
}

TEST(Eliminate, TallMatrixStopsAtColumnCount) {
  Trace t = eliminate(Matrix{{1, 0}, {0, 2}, {3, 4}});
  EXPECT_EQ(t.rank(), 2u);
  EXPECT_EQ(t.final_state(), (Matrix{{1, 0}, {0, 1}, {0, 0}}));
}

TEST(Eliminate, Errors) {
  EXPECT_THROW(eliminate(Matrix{{0, 1}, {1, 0}}), ZeroPivot);
  EXPECT_THROW(eliminate(Matrix(2, 3)), ZeroMatrix);
  // Second pivot vanishes while row 3 is still non-zero.
  try {
    eliminate(Matrix{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}});
    FAIL() << "expected ZeroPivot";
  } catch (const ZeroPivot& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(GjProduct, Examples) {
  EXPECT_EQ(gj_product(eliminate(Matrix::identity(3))), Matrix::identity(3));
  EXPECT_EQ(gj_product(eliminate(kRunning2)), (Matrix{{q("3/2"), q("-1/2")}, {-2, 1}}));
  Trace t = eliminate(kRunning3);
  EXPECT_EQ(gj_product(t) * kRunning3, t.final_state());
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(Matrix::identity(4)), Matrix::identity(4));
  EXPECT_EQ(inverse(kRunning2), (Matrix{{q("3/2"), q("-1/2")}, {-2, 1}}));
  EXPECT_EQ(inverse(kRunning2), testing::adjugate_inverse(kRunning2));
  EXPECT_EQ(inverse(kRunning3), testing::adjugate_inverse(kRunning3));
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), Singular);
  EXPECT_THROW(inverse(Matrix(2, 3)), NotSquare);
  EXPECT_THROW(inverse(Matrix{{0, 1}, {1, 0}}), ZeroPivot);
}

TEST(IsDiagonallyEliminable, Examples) {
  EXPECT_TRUE(is_diagonally_eliminable(Matrix::identity(4), 4));
  EXPECT_FALSE(is_diagonally_eliminable(Matrix{{0, 1}, {1, 0}}, 2));
  EXPECT_TRUE(is_diagonally_eliminable(kRunning3, 3));
  EXPECT_THROW(is_diagonally_eliminable(kRunning3, 0), DimensionError);
  EXPECT_THROW(is_diagonally_eliminable(kRunning3, 4), DimensionError);
}

// Every step of every trace: result = op * previous, and G_q has the shape
// of a row scaling (odd) or a single-column update (even).
TEST(EngineProperty, StepSoundnessAndBlockForm) {
  MatrixGenerator gen(21);
  int traced = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Matrix a = gen.integer_matrix(2 + trial % 4, 2 + (trial / 4) % 4, 9);
    if (a.is_zero()) continue;
    std::optional<Trace> t;
    try {
      t.emplace(eliminate(a));
    } catch (const ZeroPivot&) {
      continue;
    }
    ++traced;
    ASSERT_EQ(t->steps().size(), 2 * t->rank());
    for (const Step& s : t->steps()) {
      ASSERT_EQ(s.result, s.op * t->state(s.q - 1));
      ASSERT_TRUE(testing::all_canonical(s.result));
      const std::size_t p = s.level() + 1;
      for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= a.rows(); ++j) {
          const Rational& g = s.op(i, j);
          if (s.is_odd()) {
            if (i != j) ASSERT_TRUE(g.is_zero());
            if (i == j && i != p) ASSERT_EQ(g, Rational(1));
          } else {
            if (i == j) ASSERT_EQ(g, Rational(1));
            if (i != j && j != p) ASSERT_TRUE(g.is_zero());
          }
        }
      }
    }
    for (std::size_t k = 0; k < t->rank(); ++k) {
      const Matrix& state = t->state(2 * k);
      ASSERT_FALSE(state(k + 1, k + 1).is_zero());
      for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= k; ++j) {
          ASSERT_EQ(state(i, j), Rational(i == j ? 1 : 0));
        }
      }
    }
  }
  EXPECT_GT(traced, 100);
}

// Elimination succeeds iff m_1..m_r are all non-zero, r = rank.
TEST(EngineProperty, DiagonalEliminabilityMatchesPrincipalMinors) {
  MatrixGenerator gen(22);
  int failures = 0;
  int successes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // Small entries make vanishing principal minors common.
    Matrix a = trial % 2 == 0 ? gen.integer_matrix(3, 4, 1)
                              : gen.low_rank_matrix(4, 3, 2, 1);
    if (a.is_zero()) continue;
    const std::size_t r = rank_by_minors(a);
    bool eliminable = is_diagonally_eliminable(a, r);
    bool succeeded = true;
    try {
      Trace t = eliminate(a);
      ASSERT_EQ(t.rank(), r) << a;
    } catch (const ZeroPivot&) {
      succeeded = false;
    }
    ASSERT_EQ(succeeded, eliminable) << a;
    (succeeded ? successes : failures)++;
  }
  EXPECT_GT(failures, 20);
  EXPECT_GT(successes, 20);
}

// m_{k+1} = a_11 a^(2)_22 ... a^(2k)_{k+1,k+1} holds with the pivots read
// before scaling. The other readings (a^(1)_22 for the second factor, or
// the post-scaling a^(2k-1)_kk, which is always 1) do not give the minor.
TEST(EngineProperty, PivotProductUsesPreScalingPivots) {
  Matrix b{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  Trace t = eliminate(b);
  ASSERT_EQ(t.pivot(1), q("5/2"));
  Rational product(1);
  for (std::size_t k = 0; k < 3; ++k) {
    product *= t.pivot(k);
    EXPECT_EQ(principal_minor(b, k + 1), product);
  }
  EXPECT_EQ(principal_minor(b, 3), Rational(18));

  Rational first_scaled = b(1, 1) * t.state(1)(2, 2);
  EXPECT_NE(first_scaled, principal_minor(b, 2));
  Rational post_scaling = b(1, 1) * t.state(3)(2, 2) * t.state(4)(3, 3);
  EXPECT_EQ(t.state(3)(2, 2), Rational(1));
  EXPECT_NE(post_scaling, principal_minor(b, 3));
}

TEST(EngineProperty, InverseMatchesAdjugate) {
  MatrixGenerator gen(23);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix a = gen.integer_matrix(n, n, 9);
    if (det_bareiss(a).is_zero()) continue;
    try {
      Matrix inv = inverse(a);
      ASSERT_EQ(inv * a, Matrix::identity(n));
      ASSERT_EQ(a * inv, Matrix::identity(n));
      ASSERT_EQ(inv, testing::adjugate_inverse(a));
      ++checked;
    } catch (const ZeroPivot&) {
      ASSERT_FALSE(is_diagonally_eliminable(a, n));
    }
  }
  EXPECT_GT(checked, 80);
}

}  // namespace
}  // namespace gjx
