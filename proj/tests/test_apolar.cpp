#include "apolar/apolar.hpp"
#include "apolar/errors.hpp"
#include "apolar/fixtures.hpp"

#include "oracle/generators.hpp"
#include "oracle/naive_gauss_jordan.hpp"

#include <gtest/gtest.h>

using namespace apolar;

namespace {

Poly P(const char* s, std::size_t n) { return parse_poly(s, n); }

std::vector<std::size_t> hilb(const char* name) { return hilbert_A(find_fixture(name).poly()).dims; }

// Catalecticant built monomial by monomial through repeated differentiation.
oracle::Matrix brute_catalecticant(const Poly& f, int k) {
  const int d = homogeneous_degree(f);
  const auto rows = monomials_of_degree(f.nvars(), d - k);
  const auto cols = monomials_of_degree(f.nvars(), k);
  oracle::Matrix m(rows.size(), std::vector<mpq_class>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Poly g = f;
    for (std::size_t v = 0; v < f.nvars(); ++v)
      for (int e = 0; e < cols[j][v]; ++e) g = diff(g, v);
    for (std::size_t i = 0; i < rows.size(); ++i) m[i][j] = g.coefficient(rows[i]);
  }
  return m;
}

// True iff the operator lists span the same subspace of Q_k.
bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b, std::size_t nvars, int k) {
  const MonomialIndex idx(monomials_of_degree(nvars, k));
  std::vector<QVec> va, vb, all;
  for (const auto& p : a) va.push_back(coordinates(p, idx));
  for (const auto& p : b) vb.push_back(coordinates(p, idx));
  all = va;
  all.insert(all.end(), vb.begin(), vb.end());
  const std::size_t n = idx.size();
  const std::size_t ra = va.empty() ? 0 : rank(QMat::from_columns(n, va));
  const std::size_t rb = vb.empty() ? 0 : rank(QMat::from_columns(n, vb));
  const std::size_t rall = all.empty() ? 0 : rank(QMat::from_columns(n, all));
  return ra == rb && rb == rall;
}

std::vector<Poly> ops(std::initializer_list<const char*> xs, std::size_t n) {
  std::vector<Poly> out;
  for (auto x : xs) out.push_back(P(x, n));
  return out;
}

}  // namespace

TEST(Hilbert, QuarticFixtures) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(hilb("fermat:2:4"), (V{1, 3, 3, 3, 1}));
  EXPECT_EQ(hilb("caporali"), (V{1, 3, 4, 3, 1}));
  EXPECT_EQ(hilb("caporali1"), (V{1, 3, 6, 3, 1}));
  EXPECT_EQ(hilb("caporali2"), (V{1, 3, 4, 3, 1}));
  EXPECT_EQ(hilb("quartic-e6"), (V{1, 3, 3, 3, 1}));
  EXPECT_EQ(hilb("quartic-3a2"), (V{1, 3, 6, 3, 1}));
  EXPECT_EQ(hilb("quartic-2a3"), (V{1, 3, 4, 3, 1}));
  EXPECT_EQ(hilb("quartic-4a1"), (V{1, 3, 5, 3, 1}));
  EXPECT_EQ(hilb("lines-3x"), (V{1, 3, 4, 3, 1}));
}

TEST(Hilbert, SmallCases) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(hilbert_A(P("x0*x1*x2", 3)).dims, (V{1, 3, 3, 1}));
  EXPECT_EQ(hilbert_A(P("x0^5", 1)).dims, (V{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(hilbert_A(P("x0^2+x1^2", 2)).dims, (V{1, 2, 1}));
}

TEST(Annihilator, DegreeTwoPieces) {
  auto ann2 = [](const char* name) {
    const Fixture fx = find_fixture(name);
    return ann_basis(fx.poly(), 2);
  };
  EXPECT_TRUE(same_span(ann2("fermat:2:4"), ops({"x0*x1", "x0*x2", "x1*x2"}, 3), 3, 2));
  EXPECT_TRUE(same_span(ann2("quartic-e6"), ops({"x1^2", "x0*x2", "x1*x2"}, 3), 3, 2));
  EXPECT_TRUE(same_span(ann2("caporali"), ops({"x0*x1-x1*x2", "x0*x2-x1*x2"}, 3), 3, 2));
  EXPECT_TRUE(same_span(ann2("lines-3x"), ops({"x0*x1", "x2^2"}, 3), 3, 2));
  EXPECT_TRUE(same_span(ann2("quartic-2a3"), ops({"x0*x2", "x1*x2"}, 3), 3, 2));
  EXPECT_TRUE(same_span(ann2("caporali2"), ops({"x0*x2", "x1*x2"}, 3), 3, 2));
  EXPECT_TRUE(ann2("quartic-3a2").empty());
  EXPECT_EQ(ann_basis(find_fixture("quartic-3a2").poly(), 3).size(), 7u);
  EXPECT_EQ(ann_basis(find_fixture("quartic-2a3").poly(), 3).size(), 7u);
  EXPECT_EQ(ann_basis(find_fixture("caporali2").poly(), 3).size(), 7u);
}

TEST(Annihilator, OperatorsKillTheForm) {
  gen::Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const Poly f = rng.sparse_form(3, 4, 0.4);
    if (f.is_zero()) continue;
    for (int k = 0; k <= 5; ++k)
      for (const auto& a : ann_basis(f, k)) EXPECT_TRUE(apply_op(a, f).is_zero());
  }
}

TEST(Cone, Detection) {
  EXPECT_TRUE(is_cone(P("x0^3+x1^3", 3)));
  EXPECT_TRUE(is_cone(P("(x0+x1)^3+x2^3", 3)));
  EXPECT_FALSE(is_cone(P("x0*x1*x2", 3)));
  EXPECT_THROW(ApolarAlgebra(P("x0^3+x1^3", 3)), ConeError);
  EXPECT_THROW(ApolarAlgebra(P("x0+x1^2", 2)), PreconditionError);
}

TEST(Apolar, CatalecticantMatchesBruteForce) {
  gen::Rng rng(32);
  for (int t = 0; t < 30; ++t) {
    const Poly f = rng.sparse_form(3, 2 + t % 4, 0.5);
    if (f.is_zero()) continue;
    const int d = homogeneous_degree(f);
    for (int k = 0; k <= d; ++k) {
      const QMat c = catalecticant(f, k);
      const oracle::Matrix b = brute_catalecticant(f, k);
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) ASSERT_EQ(c(i, j), b[i][j]);
    }
  }
}

// 100 random forms: Gorenstein symmetry and catalecticant rank symmetry,
// with ranks cross-checked by the naive oracle.
TEST(ApolarProperty, GorensteinAndCatalecticantSymmetry) {
  gen::Rng rng(33);
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = rng.integer(2, 4);
    const int d = rng.integer(2, n == 4 ? 4 : 5);
    const Poly f = rng.sparse_form(n, d, 0.6);
    if (f.is_zero()) continue;
    for (int k = 0; k <= d; ++k) {
      const std::size_t r = oracle::rank(brute_catalecticant(f, k));
      EXPECT_EQ(rank(catalecticant(f, k)), r);
      EXPECT_EQ(r, oracle::rank(brute_catalecticant(f, d - k)));
    }
    if (!is_cone(f)) {
      const auto h = hilbert_A(f).dims;
      for (int k = 0; k <= d; ++k) EXPECT_EQ(h[k], h[d - k]);
      EXPECT_EQ(h[0], 1u);
      EXPECT_EQ(h[d], 1u);
      EXPECT_EQ(h[1], n);
    }
    ++checked;
  }
}

TEST(ApolarProperty, GenericHilbertVector) {
  // A general form has h_k = min(dim Q_k, dim Q_{d-k}).
  gen::Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = rng.integer(2, 4);
    const int d = rng.integer(2, 5);
    const Poly f = rng.form(n, d, 1000);
    const auto h = hilbert_A(f).dims;
    for (int k = 0; k <= d; ++k) EXPECT_EQ(h[k], std::min(monomial_count(n, k), monomial_count(n, d - k)));
  }
}

TEST(Apolar, CoordinatesAndMultiplication) {
  gen::Rng rng(35);
  for (int t = 0; t < 15; ++t) {
    const Poly f = rng.non_cone_form(3, 4);
    const ApolarAlgebra A(f);
    for (int k = 0; k < 4; ++k) {
      const auto basis = A.basis_operators(k);
      for (std::size_t v = 0; v < 3; ++v) {
        const QMat mm = A.multiplication_matrix(v, k);
        ASSERT_EQ(mm.rows(), A.dim(k + 1));
        ASSERT_EQ(mm.cols(), A.dim(k));
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const QVec c = A.coordinates(Poly::variable(3, v) * basis[j], k + 1);
          // Rebuild the image and compare with the operator applied to f.
          Poly image(3);
          const auto next = A.basis_operators(k + 1);
          for (std::size_t i = 0; i < c.size(); ++i) {
            EXPECT_EQ(mm(i, j), c[i]);
            image += c[i] * apply_op(next[i], f);
          }
          EXPECT_EQ(image, apply_op(Poly::variable(3, v) * basis[j], f));
        }
      }
    }
  }
}

TEST(DualBasis, PairingIsIdentity) {
  gen::Rng rng(36);
  std::vector<Poly> forms{find_fixture("fermat:2:4").poly(), find_fixture("gn-quintic").poly(),
                          find_fixture("ikeda").poly()};
  for (int t = 0; t < 5; ++t) forms.push_back(rng.non_cone_form(3, 3 + t % 3));
  for (const auto& f : forms) {
    const ApolarAlgebra A(f);
    for (int k = 0; k <= A.socle_degree(); ++k) {
      const DualBasis b = dual_basis(A, k);
      EXPECT_EQ(apply_op(b.theta, f), Poly::constant(f.nvars(), 1));
      ASSERT_EQ(b.dual.size(), b.primal.size());
      for (std::size_t i = 0; i < b.dual.size(); ++i)
        for (std::size_t j = 0; j < b.primal.size(); ++j)
          EXPECT_EQ(apply_op(b.dual[i] * b.primal[j], f), Poly::constant(f.nvars(), i == j ? 1 : 0));
    }
  }
}

TEST(Apolar, IkedaSecondPiece) {
  EXPECT_EQ(ApolarAlgebra(find_fixture("ikeda").poly()).dim(2), 10u);
}

TEST(Fixtures, ParseWithRecordedDegree) {
  for (const auto& name : fixture_names()) {
    if (name == "fermat:n:d") continue;
    const Fixture fx = find_fixture(name);
    const Poly f = fx.poly();
    EXPECT_TRUE(f.is_homogeneous()) << name;
    EXPECT_EQ(homogeneous_degree(f), fx.degree) << name;
    EXPECT_EQ(f.nvars(), fx.nvars) << name;
    for (const auto& p : fx.singular_points) {
      EXPECT_TRUE(eval(f, p) == 0) << name;
      for (std::size_t i = 0; i < f.nvars(); ++i) EXPECT_TRUE(eval(diff(f, i), p) == 0) << name;
    }
  }
  EXPECT_EQ(find_fixture("fermat:3:5").poly(), P("x0^5+x1^5+x2^5+x3^5", 4));
  EXPECT_THROW(find_fixture("nope"), PreconditionError);
  EXPECT_THROW(find_fixture("fermat:2"), PreconditionError);
  EXPECT_THROW(find_fixture("fermat:a:4"), PreconditionError);
}
