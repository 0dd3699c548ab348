#pragma once

#include "apolar/apolar.hpp"
#include "apolar/linalg.hpp"
#include "apolar/polymat.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace apolar {

/// Hess^(k,l): entry (i, j) is (beta_i * alpha_j)(f) with beta_i running over
/// the basis of A_l (rows) and alpha_j over the basis of A_k (columns).
PolyMat mixed_hessian(const ApolarAlgebra& A, int k, int l);

/// Same construction over arbitrary operator lists.
PolyMat mixed_hessian(const Poly& f, std::span<const Poly> row_ops, std::span<const Poly> col_ops);

/// Rows indexed by the dual basis of A_l (operators of degree d-l), columns by
/// the basis of A_k; entries have degree l-k.
PolyMat dual_mixed_hessian(const ApolarAlgebra& A, int l, int k);

/// det Hess^(k,k); requires 2k <= d.
Poly hess_k(const ApolarAlgebra& A, int k);

/// Square matrices up to this size get an exact symbolic determinant when
/// random evaluation finds them singular.
inline constexpr std::size_t kExactDeterminantLimit = 10;

struct GenericRank {
  std::size_t rank = 0;
  std::size_t max_rank = 0;  // min(rows, cols)
  bool maximal = false;      // exact whenever true
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Largest rank of the matrix over `trials` random integer points. Stops
/// early once the rank is maximal.
GenericRank generic_rank(const PolyMat& m, int trials, std::uint64_t seed);

/// For a square matrix within kExactDeterminantLimit: true iff its symbolic
/// determinant vanishes. nullopt when no exact verdict is attempted.
std::optional<bool> certify_singular(const PolyMat& m);

/// Matrix of multiplication by L^(l-k) from A_k to A_l in the algebra bases,
/// found by multiplying operators and solving coordinates in A_l.
QMat lefschetz_matrix(const ApolarAlgebra& A, int k, int l, const Poly& L);

struct LefschetzHessianCheck {
  bool holds = false;
  QMat multiplication;        // lefschetz_matrix
  QMat scaled_dual_hessian;   // (l-k)! * dual Hessian at the coefficients of L
};

/// Compares the multiplication matrix of L^(l-k) with (l-k)! times the dual
/// mixed Hessian evaluated at the coefficient vector of L, exactly.
LefschetzHessianCheck check_lefschetz_hessian_identity(const ApolarAlgebra& A, int k, int l,
                                                       const Poly& L);

struct LevelVerdict {
  int k = 0;
  std::size_t size = 0;
  std::size_t generic_rank = 0;
  bool maximal = false;
  std::optional<bool> certified_singular;
};

struct StepVerdict {
  int from = 0;
  std::size_t rank = 0;
  std::size_t dim_from = 0;
  std::size_t dim_to = 0;
  bool maximal = false;
};

struct LefschetzReport {
  std::vector<LevelVerdict> levels;  // k = 0 .. floor(d/2)
  bool slp = false;
  std::vector<StepVerdict> wlp_steps;  // L: A_i -> A_{i+1}, i = 0 .. d-1
  bool wlp = false;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// SLP holds iff every Hess^k, k <= d/2, is generically nonsingular. A failing
/// level is exact when certified_singular is set, otherwise probabilistic.
LefschetzReport slp_report(const ApolarAlgebra& A, int trials, std::uint64_t seed);

struct PolarDegeneracy {
  int k = 0;
  std::size_t rank = 0;  // generic rank of Hess^(1,k)
  int dim_image = 0;     // rank - 1
  bool degenerate = false;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Dimension of the image of the k-th relative polar map.
PolarDegeneracy polar_degeneracy(const ApolarAlgebra& A, int k, int trials, std::uint64_t seed);

}  // namespace apolar
