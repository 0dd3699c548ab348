#include "apolar/betti.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <sstream>

namespace apolar {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, int size) {
  std::vector<std::vector<std::size_t>> out;
  if (size < 0 || static_cast<std::size_t>(size) > n) return out;
  std::vector<std::size_t> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int p = size - 1;
    while (p >= 0 && cur[p] == n - size + p) --p;
    if (p < 0) break;
    ++cur[p];
    for (int q = p + 1; q < size; ++q) cur[q] = cur[q - 1] + 1;
  }
  return out;
}

std::size_t binom(std::size_t n, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool known(const GradedTables& B, int m) { return m <= B.top || B.finite; }

}  // namespace

std::size_t GradedTables::dim(int m) const {
  if (m < 0) return 0;
  if (m > top) {
    if (finite) return 0;
    throw PreconditionError("degree " + std::to_string(m) + " above the computed range");
  }
  return dims[m];
}

QMat GradedTables::multiplication(std::size_t var, int m) const {
  if (m < 0 || (m >= top && finite)) return QMat(dim(m + 1), dim(m));
  if (m >= top) throw PreconditionError("multiplication above the computed range");
  return mult[m].at(var);
}

GradedTables GradedTables::from_apolar(const ApolarAlgebra& A) {
  GradedTables t;
  t.nvars = A.nvars();
  t.top = A.socle_degree();
  t.finite = true;
  for (int m = 0; m <= t.top; ++m) t.dims.push_back(A.dim(m));
  for (int m = 0; m < t.top; ++m) {
    t.mult.emplace_back();
    for (std::size_t v = 0; v < t.nvars; ++v) t.mult.back().push_back(A.multiplication_matrix(v, m));
  }
  return t;
}

GradedTables GradedTables::from_quotient(const GradedQuotient& q, int cap) {
  if (cap < 0) throw PreconditionError("cap must be nonnegative");
  GradedTables t;
  t.nvars = q.nvars();
  for (int m = 0; m <= cap; ++m) {
    t.dims.push_back(q.dim(m));
    t.top = m;
    if (t.dims.back() == 0) {
      t.finite = true;
      t.top = m - 1;
      t.dims.pop_back();
      break;
    }
  }
  for (int m = 0; m < t.top; ++m) {
    t.mult.emplace_back();
    for (std::size_t v = 0; v < t.nvars; ++v) t.mult.back().push_back(q.multiplication_matrix(v, m));
  }
  return t;
}

QMat koszul_differential(const GradedTables& B, int i, int j) {
  const std::size_t N = B.nvars;
  const int m = j - i;
  const std::size_t src_dim = B.dim(m) * binom(N, i);
  const std::size_t dst_dim = B.dim(m + 1) * binom(N, i - 1);
  QMat d(dst_dim, src_dim);
  if (i <= 0 || src_dim == 0 || dst_dim == 0) return d;
  const auto src = subsets(N, i);
  const auto dst = subsets(N, i - 1);
  const std::size_t hs = B.dim(m), ht = B.dim(m + 1);
  std::vector<QMat> mult;
  for (std::size_t v = 0; v < N; ++v) mult.push_back(B.multiplication(v, m));
  for (std::size_t s = 0; s < src.size(); ++s) {
    for (int t = 0; t < i; ++t) {
      std::vector<std::size_t> rest = src[s];
      rest.erase(rest.begin() + t);
      const std::size_t r = std::lower_bound(dst.begin(), dst.end(), rest) - dst.begin();
      const QMat& x = mult[src[s][t]];
      const int sign = t % 2 == 0 ? 1 : -1;
      for (std::size_t a = 0; a < ht; ++a)
        for (std::size_t b = 0; b < hs; ++b)
          if (sgn(x(a, b)) != 0) d(r * ht + a, s * hs + b) += sign * x(a, b);
    }
  }
  return d;
}

std::size_t BettiTable::at(int i, int j) const {
  const auto it = values.find({i, j});
  return it == values.end() ? 0 : it->second;
}

std::string BettiTable::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [ij, v] : values) {
    if (!first) out << ' ';
    first = false;
    out << "b" << ij.first << "," << ij.second << "=" << v;
  }
  if (truncated) out << (first ? "" : " ") << "(truncated at j=" << j_cap << ")";
  return out.str();
}

BettiTable koszul_betti(const GradedTables& B, int j_cap) {
  const int N = static_cast<int>(B.nvars);
  BettiTable table;
  table.nvars = B.nvars;
  if (j_cap < 0) j_cap = B.finite ? B.top + N : B.top;
  table.j_cap = j_cap;
  for (int j = 0; j <= j_cap; ++j) {
    for (int i = 0; i <= N; ++i) {
      const int m = j - i;
      if (m < 0) continue;
      // d_{i,j} lands in B_{m+1}; d_{i+1,j} starts in B_{m-1}.
      if (!known(B, m + 1)) {
        table.truncated = true;
        continue;
      }
      const std::size_t dim = B.dim(m) * binom(B.nvars, i);
      if (dim == 0) continue;
      const std::size_t r_out = rank(koszul_differential(B, i, j));
      const std::size_t r_in = i < N ? rank(koszul_differential(B, i + 1, j)) : 0;
      const std::size_t beta = dim - r_out - r_in;
      if (beta != 0) table.values[{i, j}] = beta;
    }
  }
  return table;
}

bool betti_consistency(const GradedTables& B, const BettiTable& table) {
  const int N = static_cast<int>(B.nvars);
  // beta_{i,j} needs B_{j-i+1}; skip j where any of them is unknown.
  for (int j = 0; j <= table.j_cap; ++j) {
    bool determined = true;
    for (int i = 0; i <= N; ++i)
      if (j - i >= 0 && !known(B, j - i + 1)) determined = false;
    if (!determined) continue;
    long lhs = 0;
    for (int i = 0; i <= N && i <= j; ++i) {
      const long c = static_cast<long>(binom(N, i)) * (i % 2 ? -1 : 1);
      lhs += c * static_cast<long>(B.dim(j - i));
    }
    long rhs = 0;
    for (int i = 0; i <= N; ++i) rhs += (i % 2 ? -1 : 1) * static_cast<long>(table.at(i, j));
    if (lhs != rhs) return false;
  }
  return true;
}

bool betti_self_dual(const BettiTable& table, int socle_degree) {
  const int N = static_cast<int>(table.nvars);
  if (table.truncated) return false;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= socle_degree + N; ++j)
      if (table.at(i, j) != table.at(N - i, socle_degree + N - j)) return false;
  return true;
}

}  // namespace apolar
