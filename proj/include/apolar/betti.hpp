#pragma once

#include "apolar/apolar.hpp"
#include "apolar/linalg.hpp"
#include "apolar/milnor.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace apolar {

/// A graded quotient B = R/I known through degree `top`: dims[m] and the
/// matrices of x_v : B_m -> B_{m+1}. When `finite` is set B vanishes above top.
struct GradedTables {
  std::size_t nvars = 0;
  int top = 0;
  bool finite = false;
  std::vector<std::size_t> dims;          // m = 0..top
  std::vector<std::vector<QMat>> mult;    // mult[m][v], m = 0..top-1

  std::size_t dim(int m) const;
  /// Zero-size matrix when the target lies above top in a finite algebra.
  QMat multiplication(std::size_t var, int m) const;

  static GradedTables from_apolar(const ApolarAlgebra& A);
  /// Degrees 0..cap; finite when some dims[m] == 0 with m <= cap.
  static GradedTables from_quotient(const GradedQuotient& q, int cap);
};

/// Koszul differential K_{i,j} -> K_{i-1,j} with K_{i,j} = B_{j-i} (x) wedge^i.
/// Basis of K_{i,j}: i-subsets in lexicographic order, each followed by the
/// basis of B_{j-i}.
QMat koszul_differential(const GradedTables& B, int i, int j);

struct BettiTable {
  std::size_t nvars = 0;
  int j_cap = 0;
  bool truncated = false;  // some entries with j <= j_cap were not computable
  std::map<std::pair<int, int>, std::size_t> values;  // nonzero beta_{i,j} only

  std::size_t at(int i, int j) const;
  std::string to_string() const;
};

/// beta_{i,j} = dim K_{i,j} - rank d_{i,j} - rank d_{i+1,j} for 0 <= i <= N and
/// j <= j_cap (j_cap < 0: everything that is known). Entries needing degrees
/// above `top` of a non-finite algebra are skipped and flag the table truncated.
BettiTable koszul_betti(const GradedTables& B, int j_cap = -1);

/// sum_m dim B_m t^m (1-t)^N == sum (-1)^i beta_{i,j} t^j, coefficientwise for
/// all j that the table determines.
bool betti_consistency(const GradedTables& B, const BettiTable& table);

/// beta_{i,j} == beta_{N-i, d+N-j} for a Gorenstein algebra of socle degree d.
bool betti_self_dual(const BettiTable& table, int socle_degree);

}  // namespace apolar
