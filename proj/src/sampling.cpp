#include "apolar/sampling.hpp"

#include "apolar/errors.hpp"

namespace apolar {

PointQ Sampler::point(std::size_t nvars) {
  PointQ p;
  p.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) p.emplace_back(integer());
  return p;
}

Poly Sampler::linear_form(std::size_t nvars) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < nvars; ++i)
    terms.push_back({Monomial::variable(nvars, i), Rational(integer())});
  return Poly::from_terms(nvars, std::move(terms));
}

Poly Sampler::form(std::size_t nvars, int degree, long coeff_range) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(nvars, degree))
    terms.push_back({m, Rational(integer(coeff_range))});
  return Poly::from_terms(nvars, std::move(terms));
}

PointQ linear_coefficients(const Poly& L) {
  if (!L.is_zero() && (!L.is_homogeneous() || L.max_degree() != 1))
    throw PreconditionError("expected a linear form");
  PointQ a(L.nvars());
  for (const auto& t : L.terms())
    for (std::size_t i = 0; i < L.nvars(); ++i)
      if (t.monomial[i]) a[i] = t.coefficient;
  return a;
}

}  // namespace apolar
