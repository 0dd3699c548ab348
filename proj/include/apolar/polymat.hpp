#pragma once

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace apolar {

/// Matrix with polynomial entries, e.g. a mixed Hessian. Row and column labels
/// record the operators the matrix was built from (may be empty).
class PolyMat {
public:
  PolyMat() = default;
  PolyMat(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }

  Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Poly> row_labels;
  std::vector<Poly> col_labels;

  QMat evaluate(std::span<const Rational> point) const;
  PolyMat transpose() const;
  bool is_zero() const;

  friend bool operator==(const PolyMat& a, const PolyMat& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Poly> entries_;
};

/// Exact symbolic determinant by Laplace expansion along rows, memoising the
/// minors on the leading rows by their column subsets. Intended for n <= 12.
Poly determinant(const PolyMat& m);

}  // namespace apolar
