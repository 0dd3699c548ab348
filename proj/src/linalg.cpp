#include "apolar/linalg.hpp"

#include "apolar/errors.hpp"

#include <sstream>
#include <utility>

namespace apolar {

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::from_columns(std::size_t rows, const std::vector<QVec>& columns) {
  QMat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw PreconditionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  QMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QVec QMat::column(std::size_t c) const {
  QVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product dimension mismatch");
  QMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

QMat operator*(const Rational& s, QMat m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
  return m;
}

QVec operator*(const QMat& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw PreconditionError("matrix-vector dimension mismatch");
  QVec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(v[c]) != 0) out[r] += m(r, c) * v[c];
  return out;
}

std::string QMat::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

namespace {

/// Integer row-echelon form from fraction-free elimination.
struct Echelon {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;
  std::vector<std::size_t> pivots;

  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

Echelon bareiss(const QMat& m) {
  Echelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.a.resize(e.rows * e.cols);

  // Scale each row by the lcm of its denominators so it becomes integral.
  for (std::size_t r = 0; r < e.rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < e.cols; ++c) {
      const auto& d = m(r, c).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < e.cols; ++c) {
      const Rational& x = m(r, c);
      if (sgn(x) == 0) continue;
      e.at(r, c) = x.get_num() * (l / x.get_den());
    }
  }

  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols && r < e.rows; ++c) {
    std::size_t p = r;
    while (p < e.rows && sgn(e.at(p, c)) == 0) ++p;
    if (p == e.rows) continue;
    if (p != r)
      for (std::size_t j = c; j < e.cols; ++j) std::swap(e.at(p, j), e.at(r, j));

    const Integer& piv = e.at(r, c);
    for (std::size_t i = r + 1; i < e.rows; ++i) {
      const Integer lead = e.at(i, c);
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        Integer& x = e.at(i, j);
        // x = (piv * x - lead * a[r][j]) / prev, exact
        x *= piv;
        if (sgn(lead) != 0) {
          tmp = lead * e.at(r, j);
          x -= tmp;
        }
        if (prev != 1) {
          if (!mpz_divisible_p(x.get_mpz_t(), prev.get_mpz_t()))
            throw InternalError("fraction-free elimination produced an inexact division");
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        }
      }
      e.at(i, c) = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

RrefResult rref(const QMat& m) {
  Echelon e = bareiss(m);
  RrefResult out{QMat(m.rows(), m.cols()), e.pivots};
  QMat& R = out.matrix;
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t c = e.pivots[i]; c < e.cols; ++c)
      if (sgn(e.at(i, c)) != 0) R(i, c) = Rational(e.at(i, c));

  // Back-substitution: normalise pivots bottom-up and clear above them.
  for (std::size_t ii = e.pivots.size(); ii-- > 0;) {
    const std::size_t pc = e.pivots[ii];
    const Rational inv = Rational(1) / R(ii, pc);
    for (std::size_t c = pc; c < R.cols(); ++c)
      if (sgn(R(ii, c)) != 0) R(ii, c) *= inv;
    for (std::size_t k = 0; k < ii; ++k) {
      const Rational factor = R(k, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t c = pc; c < R.cols(); ++c)
        if (sgn(R(ii, c)) != 0) R(k, c) -= factor * R(ii, c);
    }
  }
  return out;
}

std::size_t rank(const QMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.rows() < m.cols()) return bareiss(m.transpose()).pivots.size();
  return bareiss(m).pivots.size();
}

std::vector<QVec> kernel_basis(const QMat& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> in_column_space(const QMat& m, std::span<const Rational> target) {
  if (target.size() != m.rows())
    throw PreconditionError("target has length " + std::to_string(target.size()) +
                            ", matrix has " + std::to_string(m.rows()) + " rows");
  QMat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = target[r];
  }
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  QVec x(m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.matrix(i, m.cols());

  const QVec check = m * std::span<const Rational>(x);
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (check[r] != target[r]) throw InternalError("membership certificate failed back-substitution");
  return x;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.pivots.size() < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  QMat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
  return inv;
}

ColumnSolver::ColumnSolver(QMat columns) : columns_(std::move(columns)) {
  const std::size_t k = columns_.cols();
  if (k == 0) return;
  const RrefResult red = rref(columns_.transpose());
  if (red.pivots.size() != k) throw InternalError("ColumnSolver needs independent columns");
  selected_rows_ = red.pivots;
  QMat block(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) block(i, j) = columns_(selected_rows_[i], j);
  auto inv = inverse(block);
  if (!inv) throw InternalError("selected block is singular");
  inverse_ = std::move(*inv);
}

QVec ColumnSolver::solve(std::span<const Rational> target) const {
  if (target.size() != columns_.rows()) throw PreconditionError("target length mismatch");
  QVec picked(selected_rows_.size());
  for (std::size_t i = 0; i < selected_rows_.size(); ++i) picked[i] = target[selected_rows_[i]];
  if (picked.empty()) return {};
  return inverse_ * std::span<const Rational>(picked);
}

QVec ColumnSolver::solve_checked(std::span<const Rational> target) const {
  QVec x = solve(target);
  const QVec back = columns_.cols() ? columns_ * std::span<const Rational>(x)
                                    : QVec(columns_.rows());
  for (std::size_t r = 0; r < back.size(); ++r)
    if (back[r] != target[r]) throw InternalError("target is not in the column space");
  return x;
}

}  // namespace apolar
