#include "apolar/apolar.hpp"

#include "apolar/errors.hpp"

#include <string>

namespace apolar {

namespace {

Poly monomial_operator(const Monomial& m) { return Poly::from_monomial(m); }

Rational constant_value(const Poly& p) {
  if (p.is_zero()) return 0;
  if (p.max_degree() != 0) throw InternalError("expected a constant");
  return p.terms().front().coefficient;
}

}  // namespace

QMat catalecticant(const Poly& f, int k) {
  const int d = homogeneous_degree(f);
  if (k < 0 || k > d)
    throw PreconditionError("catalecticant degree " + std::to_string(k) + " outside [0, " +
                            std::to_string(d) + "]");
  const MonomialIndex rows(monomials_of_degree(f.nvars(), d - k));
  const auto cols = monomials_of_degree(f.nvars(), k);
  QMat m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Poly image = apply_op(monomial_operator(cols[c]), f);
    for (const auto& t : image.terms()) m(rows.index_of(t.monomial), c) = t.coefficient;
  }
  return m;
}

std::vector<Poly> ann_basis(const Poly& f, int k) {
  const int d = homogeneous_degree(f);
  if (k < 0 || k > d + 1) throw PreconditionError("annihilator degree out of range");
  const auto ops = monomials_of_degree(f.nvars(), k);
  std::vector<Poly> out;
  if (k == d + 1) {
    for (const auto& m : ops) out.push_back(monomial_operator(m));
    return out;
  }
  for (const auto& v : kernel_basis(catalecticant(f, k))) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) terms.push_back({ops[i], v[i]});
    Poly alpha = Poly::from_terms(f.nvars(), std::move(terms));
    if (!apply_op(alpha, f).is_zero()) throw InternalError("annihilator does not kill f");
    out.push_back(std::move(alpha));
  }
  return out;
}

bool is_cone(const Poly& f) {
  const int d = homogeneous_degree(f);
  if (d == 0) return f.nvars() > 0;
  return rank(catalecticant(f, 1)) < f.nvars();
}

ApolarAlgebra::ApolarAlgebra(Poly f) : f_(std::move(f)) {
  d_ = homogeneous_degree(f_);
  if (d_ < 1) throw PreconditionError("A(f) needs a form of positive degree");
  degrees_.resize(d_ + 1);
  for (int k = 0; k <= d_; ++k) {
    const QMat cat = catalecticant(f_, k);
    const RrefResult red = rref(cat);
    Degree& deg = degrees_[k];
    const auto ops = monomials_of_degree(f_.nvars(), k);
    std::vector<QVec> columns;
    for (auto p : red.pivots) {
      deg.basis.push_back(ops[p]);
      columns.push_back(cat.column(p));
    }
    if (k == 1 && deg.basis.size() != f_.nvars())
      throw ConeError("V(f) is a cone: Ann(f) contains " +
                      std::to_string(f_.nvars() - deg.basis.size()) + " linear operator(s)");
    deg.image_index = MonomialIndex(monomials_of_degree(f_.nvars(), d_ - k));
    deg.solver = ColumnSolver(QMat::from_columns(cat.rows(), columns));
  }
  for (int k = 0; k <= d_; ++k)
    if (dim(k) != dim(d_ - k))
      throw InternalError("Hilbert vector of A(f) is not symmetric at degree " + std::to_string(k));
  if (dim(d_) != 1) throw InternalError("socle of A(f) is not one-dimensional");
}

std::size_t ApolarAlgebra::dim(int k) const {
  if (k < 0 || k > d_) return 0;
  return degrees_[k].basis.size();
}

std::vector<Poly> ApolarAlgebra::basis_operators(int k) const {
  std::vector<Poly> out;
  if (k < 0 || k > d_) return out;
  for (const auto& m : degrees_[k].basis) out.push_back(monomial_operator(m));
  return out;
}

GradedAlgebraView ApolarAlgebra::view() const {
  GradedAlgebraView v;
  v.socle_degree = d_;
  for (int k = 0; k <= d_; ++k) {
    v.dims.push_back(dim(k));
    v.basis.push_back(degrees_[k].basis);
  }
  return v;
}

QVec ApolarAlgebra::coordinates(const Poly& op, int k) const {
  if (k < 0 || k > d_) return {};
  if (op.is_zero()) return QVec(dim(k));
  if (op.nvars() != nvars() || !op.is_homogeneous() || op.max_degree() != k)
    throw PreconditionError("operator is not homogeneous of degree " + std::to_string(k));
  const Degree& deg = degrees_[k];
  const QVec image = apolar::coordinates(apply_op(op, f_), deg.image_index);
  return deg.solver.solve_checked(image);
}

QMat ApolarAlgebra::multiplication_matrix(std::size_t var, int k) const {
  if (var >= nvars()) throw PreconditionError("variable index out of range");
  QMat m(dim(k + 1), dim(k));
  if (m.rows() == 0 || m.cols() == 0) return m;
  const Poly x = Poly::variable(nvars(), var);
  const auto ops = basis_operators(k);
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const QVec c = coordinates(x * ops[j], k + 1);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

GradedAlgebraView hilbert_A(const Poly& f) { return ApolarAlgebra(f).view(); }

DualBasis dual_basis(const ApolarAlgebra& A, int k) {
  const int d = A.socle_degree();
  if (k < 0 || k > d) throw PreconditionError("dual basis degree out of range");
  const Poly& f = A.form();

  DualBasis out;
  out.degree = k;
  for (const auto& m : monomials_of_degree(f.nvars(), d)) {
    const Rational v = constant_value(apply_op(Poly::from_monomial(m), f));
    if (sgn(v) != 0) {
      out.theta = Poly::from_monomial(m, Rational(1) / v);
      break;
    }
  }
  if (out.theta.is_zero()) throw InternalError("f is annihilated by every degree-d operator");

  out.primal = A.basis_operators(k);
  const auto complement = A.basis_operators(d - k);
  const std::size_t h = out.primal.size();
  if (complement.size() != h) throw InternalError("complementary degrees differ in dimension");

  // pairing(a, j) = coefficient of theta in complement[a] * primal[j]; theta(f) = 1
  QMat pairing(h, h);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t j = 0; j < h; ++j)
      pairing(a, j) = constant_value(apply_op(complement[a] * out.primal[j], f));
  const auto inv = inverse(pairing);
  if (!inv) throw InternalError("pairing A_k x A_{d-k} -> A_d is singular");

  for (std::size_t i = 0; i < h; ++i) {
    Poly op(f.nvars());
    for (std::size_t a = 0; a < h; ++a) op += complement[a] * (*inv)(i, a);
    out.dual.push_back(std::move(op));
  }
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      const Rational v = constant_value(apply_op(out.dual[i] * out.primal[j], f));
      if (v != (i == j ? 1 : 0)) throw InternalError("dual basis pairing check failed");
    }
  return out;
}

DualBasis dual_basis(const Poly& f, int k) { return dual_basis(ApolarAlgebra(f), k); }

}  // namespace apolar
