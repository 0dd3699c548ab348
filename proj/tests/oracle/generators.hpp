#pragma once

// Seeded generators for property tests.

#include "apolar/apolar.hpp"
#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

#include <random>

namespace gen {

using namespace apolar;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  Rational rational(long range = 9) {
    const long num = integer(-range, range);
    const long den = integer(1, range);
    return make_rational(num, den);
  }

  /// Dense random form with small integer coefficients.
  Poly form(std::size_t nvars, int degree, long range = 5) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(nvars, degree)) terms.push_back({m, Rational(integer(-range, range))});
    return Poly::from_terms(nvars, std::move(terms));
  }

  /// Sparse random form: each monomial kept with probability `density`.
  Poly sparse_form(std::size_t nvars, int degree, double density, long range = 5) {
    std::vector<Term> terms;
    std::bernoulli_distribution keep(density);
    for (const auto& m : monomials_of_degree(nvars, degree))
      if (keep(engine_)) terms.push_back({m, Rational(integer(-range, range))});
    return Poly::from_terms(nvars, std::move(terms));
  }

  /// Random form that is not a cone, retrying as needed.
  Poly non_cone_form(std::size_t nvars, int degree, long range = 5) {
    while (true) {
      Poly f = form(nvars, degree, range);
      if (!f.is_zero() && !is_cone(f)) return f;
    }
  }

  Poly linear(std::size_t nvars, long range = 7) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < nvars; ++i)
      terms.push_back({Monomial::variable(nvars, i), Rational(integer(-range, range))});
    return Poly::from_terms(nvars, std::move(terms));
  }

  /// Random sparse rational matrix, sometimes with one row dependent on others.
  QMat matrix(std::size_t rows, std::size_t cols, double zero_prob = 0.3) {
    QMat m(rows, cols);
    std::bernoulli_distribution zero(zero_prob);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!zero(engine_)) m(i, j) = rational();
    if (rows > 2 && integer(0, 1)) {
      const std::size_t a = integer(0, rows - 1), b = integer(0, rows - 1), t = integer(0, rows - 1);
      const Rational s = rational(), u = rational();
      for (std::size_t j = 0; j < cols; ++j) m(t, j) = s * m(a, j) + u * m(b, j);
    }
    return m;
  }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};


}  // namespace gen
