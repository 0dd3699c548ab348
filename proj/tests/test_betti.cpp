#include "apolar/apolar.hpp"
#include "apolar/betti.hpp"
#include "apolar/errors.hpp"
#include "apolar/fixtures.hpp"
#include "apolar/milnor.hpp"

#include "oracle/generators.hpp"

#include <gtest/gtest.h>

using namespace apolar;

namespace {

using Entries = std::map<std::pair<int, int>, std::size_t>;

Poly P(const char* s, std::size_t n) { return parse_poly(s, n); }

BettiTable table_of(const char* name) {
  return koszul_betti(GradedTables::from_apolar(ApolarAlgebra(find_fixture(name).poly())));
}

// Same algebra with the variables permuted and every basis reordered.
GradedTables scrambled(const GradedTables& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GradedTables s = t;
  std::vector<std::vector<std::size_t>> perms;
  for (int m = 0; m <= t.top; ++m) {
    std::vector<std::size_t> p(t.dims[m]);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    perms.push_back(p);
  }
  std::vector<std::size_t> vars(t.nvars);
  std::iota(vars.begin(), vars.end(), 0);
  std::shuffle(vars.begin(), vars.end(), rng);
  for (int m = 0; m < t.top; ++m)
    for (std::size_t v = 0; v < t.nvars; ++v) {
      const QMat& src = t.mult[m][vars[v]];
      QMat dst(src.rows(), src.cols());
      for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) dst(perms[m + 1][i], perms[m][j]) = src(i, j);
      s.mult[m][v] = dst;
    }
  return s;
}

}  // namespace

TEST(Betti, QuarticResolutions) {
  const Entries fermat{{{0, 0}, 1}, {{1, 2}, 3}, {{1, 4}, 2}, {{2, 3}, 2}, {{2, 5}, 3}, {{3, 7}, 1}};
  const Entries ci{{{0, 0}, 1}, {{1, 2}, 2}, {{1, 3}, 1}, {{2, 4}, 1}, {{2, 5}, 2}, {{3, 7}, 1}};
  const Entries generic{{{0, 0}, 1}, {{1, 3}, 7}, {{2, 4}, 7}, {{3, 7}, 1}};
  const Entries ca2{{{0, 0}, 1}, {{1, 2}, 2}, {{1, 3}, 2}, {{1, 4}, 1}, {{2, 3}, 1},
                    {{2, 4}, 2}, {{2, 5}, 2}, {{3, 7}, 1}};
  const Entries a4{{{0, 0}, 1}, {{1, 2}, 1}, {{1, 3}, 4}, {{2, 4}, 4}, {{2, 5}, 1}, {{3, 7}, 1}};
  EXPECT_EQ(table_of("fermat:2:4").values, fermat);
  EXPECT_EQ(table_of("quartic-e6").values, fermat);
  EXPECT_EQ(table_of("caporali").values, ci);
  EXPECT_EQ(table_of("lines-3x").values, ci);
  EXPECT_EQ(table_of("caporali1").values, generic);
  EXPECT_EQ(table_of("quartic-3a2").values, generic);
  EXPECT_EQ(table_of("lines-4").values, generic);
  EXPECT_EQ(table_of("caporali2").values, ca2);
  EXPECT_EQ(table_of("quartic-2a3").values, ca2);
  EXPECT_EQ(table_of("quartic-4a1").values, a4);
}

TEST(Betti, OneLinearForm) {
  // R/(x0) in one variable.
  const GradedTables t = GradedTables::from_quotient(GradedQuotient(GradedIdealPresentation::from_generators(1, {P("x0", 1)})), 3);
  EXPECT_TRUE(t.finite);
  const BettiTable b = koszul_betti(t);
  EXPECT_EQ(b.values, (Entries{{{0, 0}, 1}, {{1, 1}, 1}}));
  EXPECT_TRUE(betti_consistency(t, b));
}

TEST(Betti, PolynomialRingTruncated) {
  // Zero ideal: only beta_{0,0}; entries past the cap are flagged.
  const GradedTables t = GradedTables::from_quotient(GradedQuotient(GradedIdealPresentation{2, {}, {}}), 4);
  EXPECT_FALSE(t.finite);
  const BettiTable b = koszul_betti(t);
  EXPECT_TRUE(b.truncated);
  EXPECT_EQ(b.values, (Entries{{{0, 0}, 1}}));
  EXPECT_TRUE(betti_consistency(t, b));
}

TEST(Betti, ConsistencyAndSelfDuality) {
  for (const auto& name : fixture_names()) {
    if (name == "fermat:n:d") continue;
    const ApolarAlgebra A(find_fixture(name).poly());
    const GradedTables t = GradedTables::from_apolar(A);
    const BettiTable b = koszul_betti(t);
    EXPECT_FALSE(b.truncated);
    EXPECT_TRUE(betti_consistency(t, b)) << name;
    EXPECT_TRUE(betti_self_dual(b, A.socle_degree())) << name;
    EXPECT_EQ(b.at(0, 0), 1u);
    for (const auto& [ij, v] : b.values) EXPECT_LE(ij.first, static_cast<int>(t.nvars));
  }
}

TEST(Betti, DifferentialSquaresToZero) {
  gen::Rng rng(61);
  std::vector<GradedTables> algebras;
  algebras.push_back(GradedTables::from_apolar(ApolarAlgebra(find_fixture("caporali2").poly())));
  algebras.push_back(GradedTables::from_apolar(ApolarAlgebra(rng.non_cone_form(4, 3))));
  algebras.push_back(GradedTables::from_quotient(GradedQuotient(jac_gens(find_fixture("quartic-e6").poly(), 1)), 7));
  for (const auto& t : algebras) {
    const int N = static_cast<int>(t.nvars);
    for (int j = 0; j <= t.top; ++j)
      for (int i = 2; i <= N && j - i + 2 <= t.top; ++i) {
        if (j - i < 0) continue;
        const QMat a = koszul_differential(t, i, j);
        const QMat b = koszul_differential(t, i - 1, j);
        if (a.rows() == 0 || a.cols() == 0 || b.rows() == 0) continue;
        EXPECT_TRUE((b * a).is_zero()) << "i=" << i << " j=" << j;
      }
  }
}

TEST(Betti, IndependentOfBasisOrder) {
  gen::Rng rng(62);
  for (int t = 0; t < 5; ++t) {
    const GradedTables a = GradedTables::from_apolar(ApolarAlgebra(rng.non_cone_form(3, 4)));
    EXPECT_EQ(koszul_betti(a).values, koszul_betti(scrambled(a, t)).values);
  }
}

TEST(Betti, RandomFormsSelfDual) {
  gen::Rng rng(63);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = rng.integer(2, 4);
    const int d = rng.integer(2, 4);
    const ApolarAlgebra A(rng.non_cone_form(n, d));
    const GradedTables tab = GradedTables::from_apolar(A);
    const BettiTable b = koszul_betti(tab);
    EXPECT_TRUE(betti_consistency(tab, b));
    EXPECT_TRUE(betti_self_dual(b, d));
  }
}

TEST(Betti, JacobianQuotientTruncated) {
  const Poly f = find_fixture("quartic-e6").poly();
  const GradedTables t = GradedTables::from_quotient(GradedQuotient(jac_gens(f, 1)), 8);
  EXPECT_FALSE(t.finite);
  const BettiTable b = koszul_betti(t);
  EXPECT_TRUE(b.truncated);
  EXPECT_EQ(b.at(1, 3), 3u);
  EXPECT_TRUE(betti_consistency(t, b));
  EXPECT_THROW(t.dim(9), PreconditionError);
}
