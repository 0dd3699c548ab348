#pragma once

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

#include <cstddef>
#include <vector>

namespace apolar {

/// Per-degree dimensions of A(f) = Q/Ann(f) together with the monomial
/// operators whose classes form the chosen basis of each graded piece.
struct GradedAlgebraView {
  int socle_degree = 0;
  std::vector<std::size_t> dims;               // h_0 .. h_d
  std::vector<std::vector<Monomial>> basis;    // basis[k] spans A_k
};

/// Matrix of alpha -> alpha(f) from Q_k to R_{d-k}. Rows follow the
/// graded-lex monomials of degree d-k, columns those of degree k.
QMat catalecticant(const Poly& f, int k);

/// Basis of Ann(f)_k as operator polynomials. Valid for 0 <= k <= d+1.
std::vector<Poly> ann_basis(const Poly& f, int k);

bool is_cone(const Poly& f);

/// The algebra A(f) of a homogeneous non-cone form.
///
/// The basis of A_k is the set of pivot columns of the degree-k catalecticant
/// in RREF. Coordinates of any degree-k operator are found by solving its
/// image alpha(f) against the images of the basis operators.
class ApolarAlgebra {
public:
  /// Throws ConeError when Ann(f)_1 != 0 and PreconditionError when f is not a
  /// nonzero homogeneous form of positive degree.
  explicit ApolarAlgebra(Poly f);

  const Poly& form() const noexcept { return f_; }
  std::size_t nvars() const noexcept { return f_.nvars(); }
  int socle_degree() const noexcept { return d_; }
  std::size_t dim(int k) const;
  const std::vector<Monomial>& basis(int k) const { return degrees_.at(k).basis; }
  std::vector<Poly> basis_operators(int k) const;
  GradedAlgebraView view() const;

  /// Coordinates of the class of a homogeneous degree-k operator in basis(k).
  QVec coordinates(const Poly& op, int k) const;

  /// Matrix of multiplication by the variable X_var from A_k to A_{k+1}.
  QMat multiplication_matrix(std::size_t var, int k) const;

private:
  struct Degree {
    std::vector<Monomial> basis;
    MonomialIndex image_index;  // monomials of R_{d-k}
    ColumnSolver solver;
  };

  Poly f_;
  int d_ = 0;
  std::vector<Degree> degrees_;
};

/// Hilbert vector and bases of A(f). Same errors as ApolarAlgebra.
GradedAlgebraView hilbert_A(const Poly& f);

/// Dual basis of A_{d-k} for the basis of A_k under the pairing into A_d.
struct DualBasis {
  int degree = 0;
  std::vector<Poly> primal;  // basis of A_k (monomial operators)
  std::vector<Poly> dual;    // operators of degree d-k with dual[i]*primal[j](f) = delta_ij
  Poly theta;                // degree-d operator with theta(f) = 1
};

/// theta is the first graded-lex monomial of degree d not killing f, scaled so
/// theta(f) = 1. The pairing identity is verified exactly before returning.
DualBasis dual_basis(const ApolarAlgebra& A, int k);
DualBasis dual_basis(const Poly& f, int k);

}  // namespace apolar
