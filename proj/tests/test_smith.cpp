#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "topo/smith.hpp"

using namespace topo;

namespace {

oracle::Dense dense(const IntegerMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<oracle::Big>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, int lo, int hi) {
  std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
  std::uniform_int_distribution<int> entry(lo, hi);
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

void expect_factorization(const IntegerMatrix& m) {
  auto s = smith_normal_form(m);
  ASSERT_TRUE(s.left && s.right);
  EXPECT_EQ(*s.left * m * *s.right, s.diagonal);
  EXPECT_EQ(abs(oracle::bareiss_det(dense(*s.left))), 1);
  EXPECT_EQ(abs(oracle::bareiss_det(dense(*s.right))), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c) {
        EXPECT_EQ(s.diagonal(r, c), 0);
      }
  for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) EXPECT_EQ(s.invariants[i + 1] % s.invariants[i], 0);
  EXPECT_EQ(s.invariants, oracle::invariant_factors(dense(m)));
}

}  // namespace

TEST(Smith, TwoByTwoExample) {
  IntegerMatrix m{{2, 4}, {6, 8}};
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.invariants, (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(s.rank, 2u);
  expect_factorization(m);
}

TEST(Smith, IdentityAndZero) {
  auto id = IntegerMatrix::identity(4);
  auto s = smith_normal_form(id);
  EXPECT_EQ(s.diagonal, id);
  EXPECT_EQ(s.rank, 4u);
  auto z = smith_normal_form(IntegerMatrix(3, 2));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.diagonal.is_zero());
  EXPECT_TRUE(z.invariants.empty());
}

TEST(Smith, EmptyShapes) {
  auto s = smith_normal_form(IntegerMatrix(0, 3));
  EXPECT_EQ(s.rank, 0u);
  EXPECT_EQ(s.right->rows(), 3u);
  auto t = smith_normal_form(IntegerMatrix(2, 0));
  EXPECT_EQ(t.left->rows(), 2u);
}

TEST(Smith, DivisibilityFixNeeded) {
  // diag(2, 3) must become diag(1, 6).
  IntegerMatrix m{{2, 0}, {0, 3}};
  EXPECT_EQ(smith_normal_form(m).invariants, (std::vector<BigInt>{1, 6}));
  IntegerMatrix n{{4, 0, 0}, {0, 6, 0}, {0, 0, 10}};
  EXPECT_EQ(smith_normal_form(n).invariants, (std::vector<BigInt>{2, 2, 60}));
  expect_factorization(n);
}

TEST(Smith, NegativeEntriesGivePositiveInvariants) {
  IntegerMatrix m{{-3}};
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.invariants, (std::vector<BigInt>{3}));
  expect_factorization(m);
}

TEST(Smith, RandomMatricesAgainstDeterminantalDivisors) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) expect_factorization(random_matrix(rng, -9, 9));
}

TEST(Smith, SparseRandomMatrices) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_matrix(rng, -2, 2);
    expect_factorization(m);
  }
}

TEST(Smith, CheckedPathAgreesWithBigInt) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(rng, -9, 9);
    auto fast = smith_normal_form(m.cast<CheckedInt64>(), false);
    auto slow = smith_normal_form(m, false);
    ASSERT_EQ(fast.invariants.size(), slow.invariants.size());
    for (std::size_t i = 0; i < slow.invariants.size(); ++i) EXPECT_EQ(to_big(fast.invariants[i]), slow.invariants[i]);
    auto inv = smith_invariants(m);
    EXPECT_EQ(inv.invariants, slow.invariants);
    EXPECT_EQ(inv.rank, slow.rank);
  }
}

TEST(Smith, OverflowFallsBackToBigInt) {
  const long long big = 3037000499LL;  // big^2 fits, the products below do not
  IntegerMatrix m{{big, big + 1}, {big - 1, big}};
  m(0, 0) *= big;
  m(1, 1) *= big;
  auto inv = smith_invariants(m);
  EXPECT_EQ(inv.invariants, oracle::invariant_factors(dense(m)));
}

TEST(CheckedInt, DetectsOverflow) {
  CheckedInt64 a(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(a + CheckedInt64(1), OverflowError);
  EXPECT_THROW(a * CheckedInt64(2), OverflowError);
  EXPECT_THROW(-CheckedInt64(std::numeric_limits<std::int64_t>::min()), OverflowError);
  EXPECT_EQ((CheckedInt64(7) % CheckedInt64(3)).value(), 1);
}

TEST(Matrix, ShapeMismatchIsStructural) {
  EXPECT_THROW(IntegerMatrix(2, 3) * IntegerMatrix(2, 3), StructuralError);
}
