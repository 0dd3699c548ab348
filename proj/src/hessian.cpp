#include "apolar/hessian.hpp"

#include "apolar/errors.hpp"
#include "apolar/sampling.hpp"

#include <algorithm>

namespace apolar {

PolyMat mixed_hessian(const Poly& f, std::span<const Poly> row_ops, std::span<const Poly> col_ops) {
  PolyMat h(row_ops.size(), col_ops.size(), f.nvars());
  for (std::size_t i = 0; i < row_ops.size(); ++i)
    for (std::size_t j = 0; j < col_ops.size(); ++j)
      h(i, j) = apply_op(row_ops[i] * col_ops[j], f);
  h.row_labels.assign(row_ops.begin(), row_ops.end());
  h.col_labels.assign(col_ops.begin(), col_ops.end());
  return h;
}

PolyMat mixed_hessian(const ApolarAlgebra& A, int k, int l) {
  const int d = A.socle_degree();
  if (k < 0 || l < 0 || k + l > d)
    throw PreconditionError("mixed Hessian needs k, l >= 0 and k + l <= d");
  const auto rows = A.basis_operators(l);
  const auto cols = A.basis_operators(k);
  return mixed_hessian(A.form(), rows, cols);
}

PolyMat dual_mixed_hessian(const ApolarAlgebra& A, int l, int k) {
  if (k < 0 || k > l || l > A.socle_degree())
    throw PreconditionError("dual mixed Hessian needs 0 <= k <= l <= d");
  const DualBasis dual = dual_basis(A, l);
  const auto cols = A.basis_operators(k);
  return mixed_hessian(A.form(), dual.dual, cols);
}

Poly hess_k(const ApolarAlgebra& A, int k) {
  if (k < 0 || 2 * k > A.socle_degree()) throw PreconditionError("hess^k needs 2k <= d");
  const PolyMat h = mixed_hessian(A, k, k);
  if (h.rows() != h.cols()) throw InternalError("Hess^k is not square");
  return determinant(h);
}

GenericRank generic_rank(const PolyMat& m, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("generic_rank needs at least one trial");
  GenericRank out;
  out.max_rank = std::min(m.rows(), m.cols());
  out.seed = seed;
  Sampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    const PointQ p = sampler.point(m.nvars());
    out.rank = std::max(out.rank, rank(m.evaluate(p)));
    out.trials = t + 1;
    if (out.rank == out.max_rank) break;
  }
  out.maximal = out.rank == out.max_rank;
  return out;
}

std::optional<bool> certify_singular(const PolyMat& m) {
  if (m.rows() != m.cols() || m.rows() > kExactDeterminantLimit) return std::nullopt;
  return determinant(m).is_zero();
}

QMat lefschetz_matrix(const ApolarAlgebra& A, int k, int l, const Poly& L) {
  if (k < 0 || k > l || l > A.socle_degree())
    throw PreconditionError("lefschetz_matrix needs 0 <= k <= l <= d");
  linear_coefficients(L);
  const Poly power = pow(L, static_cast<unsigned>(l - k));
  const auto ops = A.basis_operators(k);
  QMat m(A.dim(l), ops.size());
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const QVec c = A.coordinates(power * ops[j], l);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

LefschetzHessianCheck check_lefschetz_hessian_identity(const ApolarAlgebra& A, int k, int l,
                                                       const Poly& L) {
  LefschetzHessianCheck out;
  out.multiplication = lefschetz_matrix(A, k, l, L);
  const PointQ a = linear_coefficients(L);
  out.scaled_dual_hessian =
      factorial(static_cast<unsigned>(l - k)) * dual_mixed_hessian(A, l, k).evaluate(a);
  out.holds = out.multiplication == out.scaled_dual_hessian;
  return out;
}

LefschetzReport slp_report(const ApolarAlgebra& A, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("slp_report needs at least one trial");
  const int d = A.socle_degree();
  LefschetzReport rep;
  rep.trials = trials;
  rep.seed = seed;

  rep.slp = true;
  for (int k = 0; 2 * k <= d; ++k) {
    const PolyMat h = mixed_hessian(A, k, k);
    LevelVerdict v;
    v.k = k;
    v.size = h.rows();
    const GenericRank g = generic_rank(h, trials, seed + static_cast<std::uint64_t>(k));
    v.generic_rank = g.rank;
    v.maximal = g.maximal;
    if (!v.maximal) {
      v.certified_singular = certify_singular(h);
      // A nonzero exact determinant overrides an unlucky sample.
      if (v.certified_singular == false) {
        v.maximal = true;
        v.generic_rank = v.size;
      }
    }
    rep.slp = rep.slp && v.maximal;
    rep.levels.push_back(v);
  }

  rep.wlp = true;
  Sampler sampler(seed ^ 0x9e3779b97f4a7c15ull);
  for (int i = 0; i < d; ++i) {
    StepVerdict s;
    s.from = i;
    s.dim_from = A.dim(i);
    s.dim_to = A.dim(i + 1);
    const std::size_t target = std::min(s.dim_from, s.dim_to);
    for (int t = 0; t < trials && s.rank < target; ++t)
      s.rank = std::max(s.rank, rank(lefschetz_matrix(A, i, i + 1, sampler.linear_form(A.nvars()))));
    s.maximal = s.rank == target;
    rep.wlp = rep.wlp && s.maximal;
    rep.wlp_steps.push_back(s);
  }
  return rep;
}

PolarDegeneracy polar_degeneracy(const ApolarAlgebra& A, int k, int trials, std::uint64_t seed) {
  const int d = A.socle_degree();
  if (k < 1 || k >= d) throw PreconditionError("polar map order must satisfy 1 <= k < d");
  const GenericRank g = generic_rank(mixed_hessian(A, 1, k), trials, seed);
  PolarDegeneracy out;
  out.k = k;
  out.rank = g.rank;
  out.dim_image = static_cast<int>(g.rank) - 1;
  out.degenerate = out.dim_image < static_cast<int>(A.nvars()) - 1;
  out.trials = g.trials;
  out.seed = seed;
  return out;
}

}  // namespace apolar
