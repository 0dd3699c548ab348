#include "apolar/polymat.hpp"

#include "apolar/errors.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace apolar {

PolyMat::PolyMat(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, Poly(nvars)) {}

QMat PolyMat::evaluate(std::span<const Rational> point) const {
  QMat m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Poly& p = (*this)(r, c);
      if (!p.is_zero()) m(r, c) = eval(p, point);
    }
  return m;
}

PolyMat PolyMat::transpose() const {
  PolyMat t(cols_, rows_, nvars_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  return t;
}

bool PolyMat::is_zero() const {
  for (const auto& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

bool operator==(const PolyMat& a, const PolyMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Poly determinant(const PolyMat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(m.nvars(), 1);
  if (n > 20) throw PreconditionError("symbolic determinant limited to 20x20");

  // minors[S] = det of rows 0..|S|-1 restricted to the columns in S.
  std::unordered_map<std::uint32_t, Poly> minors{{0u, Poly::constant(m.nvars(), 1)}};
  for (std::size_t r = 0; r < n; ++r) {
    std::unordered_map<std::uint32_t, Poly> next;
    for (const auto& [subset, minor] : minors) {
      if (minor.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t bit = 1u << c;
        if (subset & bit) continue;
        const Poly& entry = m(r, c);
        if (entry.is_zero()) continue;
        // Expanding along the last row r: the sign is (-1)^(r + position of c
        // in the sorted column set), i.e. the count of chosen columns above c.
        const int above = std::popcount(subset & ~((bit << 1) - 1));
        Poly term = minor * entry;
        if (above % 2) term = -term;
        auto [it, inserted] = next.try_emplace(subset | bit, std::move(term));
        if (!inserted) it->second += term;
      }
    }
    minors = std::move(next);
  }
  const auto it = minors.find((1u << n) - 1);
  return it == minors.end() ? Poly(m.nvars()) : it->second;
}

}  // namespace apolar
