#pragma once

#include "apolar/poly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace apolar {

using QVec = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMat {
public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMat identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static QMat from_columns(std::size_t rows, const std::vector<QVec>& columns);
  static QMat from_rows(const std::vector<QVec>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  QVec column(std::size_t c) const;

  QMat transpose() const;
  bool is_zero() const;

  friend bool operator==(const QMat& a, const QMat& b) = default;
  friend QMat operator*(const QMat& a, const QMat& b);
  friend QMat operator*(const Rational& s, QMat m);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QVec operator*(const QMat& m, std::span<const Rational> v);

struct RrefResult {
  QMat matrix;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row-echelon form over Q.
///
/// Rows are first scaled to integers, then eliminated fraction-free (Bareiss);
/// the echelon form is normalised by exact back-substitution. The pivot in
/// each column is the first nonzero entry at or below the current row.
RrefResult rref(const QMat& m);

std::size_t rank(const QMat& m);

/// Basis of the right null space, one vector per free column of the RREF,
/// with a 1 in that free position.
std::vector<QVec> kernel_basis(const QMat& m);

/// A vector c with m * c == target, or nullopt when target is outside the
/// column space. Returned certificates are checked by multiplication.
std::optional<QVec> in_column_space(const QMat& m, std::span<const Rational> target);

/// Repeated coordinate solves against a fixed matrix with independent columns.
///
/// A set of rows on which the columns stay independent is selected once and
/// that square block inverted; `solve` then costs one matrix-vector product.
/// Targets must lie in the column space; `solve_checked` verifies this.
class ColumnSolver {
public:
  ColumnSolver() = default;
  explicit ColumnSolver(QMat columns);

  std::size_t rows() const noexcept { return columns_.rows(); }
  std::size_t cols() const noexcept { return columns_.cols(); }
  const QMat& matrix() const noexcept { return columns_; }

  QVec solve(std::span<const Rational> target) const;
  /// Throws InternalError when target is not in the column space.
  QVec solve_checked(std::span<const Rational> target) const;

private:
  QMat columns_;
  std::vector<std::size_t> selected_rows_;
  QMat inverse_;
};

/// Inverse of a square matrix; nullopt when singular.
std::optional<QMat> inverse(const QMat& m);

}  // namespace apolar
