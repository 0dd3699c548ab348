#include "apolar/errors.hpp"
#include "apolar/linalg.hpp"

#include "oracle/generators.hpp"
#include "oracle/naive_gauss_jordan.hpp"

#include <gtest/gtest.h>

using namespace apolar;

namespace {

oracle::Matrix to_oracle(const QMat& m) {
  oracle::Matrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST(Rref, MatchesNaiveGaussJordan) {
  gen::Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = rng.integer(1, 12), c = rng.integer(1, 12);
    const QMat m = rng.matrix(r, c);
    const RrefResult a = rref(m);
    const oracle::Reduced b = oracle::gauss_jordan(to_oracle(m));
    ASSERT_EQ(a.pivots, b.pivots);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) ASSERT_EQ(a.matrix(i, j), b.m[i][j]) << i << "," << j;
    EXPECT_EQ(rank(m), b.pivots.size());
  }
}

TEST(Rref, KnownMatrix) {
  const QMat m = QMat::from_rows({{2, 4, 6}, {1, 2, 4}, {3, 6, 10}});
  const RrefResult r = rref(m);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.matrix, QMat::from_rows({{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST(Rank, EdgeCases) {
  EXPECT_EQ(rank(QMat(0, 0)), 0u);
  EXPECT_EQ(rank(QMat(3, 4)), 0u);
  EXPECT_EQ(rank(QMat::identity(5)), 5u);
  EXPECT_EQ(rank(QMat::from_rows({{make_rational(1, 3), make_rational(2, 3)}, {1, 2}})), 1u);
}

TEST(Kernel, VectorsAreKilledAndIndependent) {
  gen::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const QMat m = rng.matrix(rng.integer(1, 8), rng.integer(1, 10));
    const auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + rank(m), m.cols());
    for (const auto& v : ker) {
      const QVec z = m * v;
      for (const auto& x : z) EXPECT_EQ(x, 0);
    }
    if (!ker.empty()) EXPECT_EQ(rank(QMat::from_columns(m.cols(), ker)), ker.size());
  }
}

TEST(ColumnSpace, Membership) {
  gen::Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const QMat m = rng.matrix(rng.integer(1, 9), rng.integer(1, 9));
    QVec x(m.cols());
    for (auto& v : x) v = rng.rational();
    const QVec y = m * x;
    const auto c = in_column_space(m, y);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(m * *c, y);
  }
  const QMat m = QMat::from_rows({{1, 0}, {0, 1}, {0, 0}});
  EXPECT_FALSE(in_column_space(m, QVec{0, 0, 1}).has_value());
}

TEST(Inverse, RandomAndSingular) {
  gen::Rng rng(8);
  int inverted = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = rng.integer(1, 7);
    const QMat m = rng.matrix(n, n, 0.1);
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), rank(m) == n);
    if (inv) {
      EXPECT_EQ(m * *inv, QMat::identity(n));
      ++inverted;
    }
  }
  EXPECT_GT(inverted, 10);
  EXPECT_FALSE(inverse(QMat::from_rows({{1, 2}, {2, 4}})).has_value());
}

TEST(ColumnSolver, RecoversCoordinates) {
  gen::Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = rng.integer(2, 10);
    QMat m = rng.matrix(rows, rng.integer(1, static_cast<long>(rows)), 0.2);
    const RrefResult r = rref(m);
    std::vector<QVec> cols;
    for (auto p : r.pivots) cols.push_back(m.column(p));
    if (cols.empty()) continue;
    const QMat indep = QMat::from_columns(rows, cols);
    const ColumnSolver s(indep);
    QVec x(cols.size());
    for (auto& v : x) v = rng.rational();
    EXPECT_EQ(s.solve_checked(indep * x), x);
  }
  const ColumnSolver s(QMat::from_rows({{1}, {0}}));
  EXPECT_THROW(s.solve_checked(QVec{0, 1}), InternalError);
}
