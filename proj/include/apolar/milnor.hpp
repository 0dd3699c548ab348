#pragma once

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

/// Homogeneous ideal of R given by nonzero homogeneous generators.
struct GradedIdealPresentation {
  std::size_t nvars = 0;
  std::vector<Poly> generators;
  std::vector<int> degrees;  // degrees[i] = degree of generators[i]

  static GradedIdealPresentation from_generators(std::size_t nvars, std::vector<Poly> gens);
};

/// Distinct nonzero k-th order partials of f, 1 <= k < d. All have degree d-k.
GradedIdealPresentation jac_gens(const Poly& f, int k);

/// dim I_m as the rank of the span of R_{m-e} * g over generators g.
std::size_t ideal_dim(const GradedIdealPresentation& ideal, int m);

/// The quotient R/I degree by degree.
///
/// For each requested degree m the span of I_m is put in RREF with monomials
/// as columns; the non-pivot monomials form the standard basis of (R/I)_m and
/// reducing a polynomial means clearing its pivot coordinates.
class GradedQuotient {
public:
  explicit GradedQuotient(GradedIdealPresentation ideal);

  const GradedIdealPresentation& ideal() const noexcept { return ideal_; }
  std::size_t nvars() const noexcept { return ideal_.nvars; }

  std::size_t dim(int m) const;
  const std::vector<Monomial>& standard_monomials(int m) const;
  /// Coordinates of the class of a homogeneous degree-m polynomial.
  QVec reduce(const Poly& p, int m) const;
  /// Matrix of multiplication by x_var from (R/I)_m to (R/I)_{m+1}.
  QMat multiplication_matrix(std::size_t var, int m) const;

private:
  struct Degree {
    MonomialIndex monomials;
    QMat reduced_span;  // nonzero rows of the RREF of I_m
    std::vector<std::size_t> pivots;
    std::vector<Monomial> standard;
    std::vector<std::size_t> standard_positions;
  };

  const Degree& degree(int m) const;

  GradedIdealPresentation ideal_;
  mutable std::vector<std::optional<Degree>> cache_;
};

enum class MilnorClass { Artinian, Stable, Undetermined };

std::string to_string(MilnorClass c);

/// Hilbert function of M^k(f) = R/J^k(f) up to a degree cap, with a verdict.
struct MilnorProfile {
  int order = 1;
  int m_cap = 0;
  std::vector<std::size_t> dims;  // dims[m] for m = 0..m_cap
  MilnorClass classification = MilnorClass::Undetermined;
  int vanishing_degree = -1;  // first m with dims[m] == 0 (Artinian)
  std::size_t tail_value = 0; // stable value (Stable)
  int tail_from = -1;         // first m of the constant tail (Stable)
  int certification_bound = 0;
};

/// (n+1)(d-k-1)+1: M^k(f) is Artinian iff it vanishes in this degree.
int artinian_bound(std::size_t nvars, int d, int k);
int default_milnor_cap(std::size_t nvars, int d, int k);

/// m_cap < 0 selects default_milnor_cap. Stable needs a certified
/// non-Artinian verdict and constant dims over the last three degrees.
MilnorProfile milnor_profile(const Poly& f, int k, int m_cap = -1);

bool is_artinian(const Poly& f, int k);

/// Stable tail value of dim M^k(f)_m; nullopt unless the profile is Stable.
std::optional<std::size_t> tjurina_sum(const Poly& f, int k);

struct HessianMembership {
  bool member = false;
  bool zero_hessian = false;
  Poly hessian;
  int degree = 0;
  /// Coefficients on the spanning products x^mu * f_{x_i}, listed generator by
  /// generator, each over the graded-lex monomials of degree `degree-(d-1)`.
  QVec certificate;
};

/// Whether hess_f lies in J(f). Membership certificates are verified exactly.
HessianMembership hessian_membership(const Poly& f);

/// Classical Hessian determinant det(d^2 f / dx_i dx_j).
Poly hessian_determinant(const Poly& f);

struct QuotientLefschetzReport {
  int from = 0;
  int to = 0;
  std::size_t rank = 0;
  std::size_t dim_from = 0;
  std::size_t dim_to = 0;
  bool maximal = false;
};

/// Rank of multiplication by L^(j-i) from (R/I)_i to (R/I)_j.
QuotientLefschetzReport quotient_lefschetz(const GradedQuotient& quotient, int i, int j,
                                           const Poly& L);
QuotientLefschetzReport quotient_lefschetz(const GradedIdealPresentation& ideal, int i, int j,
                                           const Poly& L);

/// Multiplicity of V(f) at the projective point p: the order of the lowest
/// nonvanishing jet of the affine equation after moving p to (1:0:...:0).
/// Zero when p is not on V(f).
int multiplicity_at(const Poly& f, std::span<const Rational> p);

}  // namespace apolar
