#pragma once

// Textbook Gauss-Jordan over Q, used only as a reference for the library's
// fraction-free elimination. Row operations work directly on rationals.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<mpq_class>>;

struct Reduced {
  Matrix m;
  std::vector<std::size_t> pivots;
};

inline Reduced gauss_jordan(Matrix m) {
  Reduced out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return gauss_jordan(m).pivots.size(); }

}  // namespace oracle
