#include "apolar/milnor.hpp"

#include "apolar/errors.hpp"
#include "apolar/polymat.hpp"

#include <algorithm>

namespace apolar {

GradedIdealPresentation GradedIdealPresentation::from_generators(std::size_t nvars,
                                                                 std::vector<Poly> gens) {
  GradedIdealPresentation p;
  p.nvars = nvars;
  for (auto& g : gens) {
    if (g.nvars() != nvars) throw PreconditionError("generator has wrong variable count");
    p.degrees.push_back(homogeneous_degree(g));
    p.generators.push_back(std::move(g));
  }
  return p;
}

GradedIdealPresentation jac_gens(const Poly& f, int k) {
  const int d = homogeneous_degree(f);
  if (k < 1 || k >= d)
    throw PreconditionError("Jacobian order " + std::to_string(k) + " outside [1, " +
                            std::to_string(d - 1) + "]");
  std::vector<Poly> gens;
  for (const auto& m : monomials_of_degree(f.nvars(), k)) {
    Poly g = apply_op(Poly::from_monomial(m), f);
    if (g.is_zero()) continue;
    if (std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
    gens.push_back(std::move(g));
  }
  return GradedIdealPresentation::from_generators(f.nvars(), std::move(gens));
}

namespace {

/// Rows are the products x^mu * g spanning I_m, in monomial coordinates.
QMat span_rows(const GradedIdealPresentation& ideal, int m, const MonomialIndex& index) {
  std::vector<QVec> rows;
  for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
    const int shift = m - ideal.degrees[g];
    if (shift < 0) continue;
    for (const auto& mu : monomials_of_degree(ideal.nvars, shift))
      rows.push_back(coordinates(Poly::from_monomial(mu) * ideal.generators[g], index));
  }
  if (rows.empty()) return QMat(0, index.size());
  return QMat::from_rows(rows);
}

}  // namespace

std::size_t ideal_dim(const GradedIdealPresentation& ideal, int m) {
  if (m < 0) throw PreconditionError("negative degree");
  const MonomialIndex index(monomials_of_degree(ideal.nvars, m));
  return rank(span_rows(ideal, m, index));
}

// ---------------------------------------------------------------- quotient

GradedQuotient::GradedQuotient(GradedIdealPresentation ideal) : ideal_(std::move(ideal)) {}

const GradedQuotient::Degree& GradedQuotient::degree(int m) const {
  if (m < 0) throw PreconditionError("negative degree");
  if (cache_.size() <= static_cast<std::size_t>(m)) cache_.resize(m + 1);
  auto& slot = cache_[m];
  if (!slot) {
    Degree deg;
    deg.monomials = MonomialIndex(monomials_of_degree(ideal_.nvars, m));
    const RrefResult red = rref(span_rows(ideal_, m, deg.monomials));
    deg.pivots = red.pivots;
    deg.reduced_span = QMat(red.pivots.size(), deg.monomials.size());
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
      for (std::size_t c = 0; c < deg.monomials.size(); ++c)
        deg.reduced_span(r, c) = red.matrix(r, c);
    std::vector<bool> pivot(deg.monomials.size(), false);
    for (auto p : red.pivots) pivot[p] = true;
    for (std::size_t c = 0; c < deg.monomials.size(); ++c)
      if (!pivot[c]) {
        deg.standard.push_back(deg.monomials.monomials()[c]);
        deg.standard_positions.push_back(c);
      }
    slot = std::move(deg);
  }
  return *slot;
}

std::size_t GradedQuotient::dim(int m) const {
  if (m < 0) return 0;
  return degree(m).standard.size();
}

const std::vector<Monomial>& GradedQuotient::standard_monomials(int m) const {
  return degree(m).standard;
}

QVec GradedQuotient::reduce(const Poly& p, int m) const {
  const Degree& deg = degree(m);
  if (!p.is_zero() && (!p.is_homogeneous() || p.max_degree() != m))
    throw PreconditionError("reduce expects a homogeneous polynomial of degree " +
                            std::to_string(m));
  QVec v = coordinates(p, deg.monomials);
  for (std::size_t r = 0; r < deg.pivots.size(); ++r) {
    const Rational factor = v[deg.pivots[r]];
    if (sgn(factor) == 0) continue;
    for (std::size_t c = deg.pivots[r]; c < v.size(); ++c)
      if (sgn(deg.reduced_span(r, c)) != 0) v[c] -= factor * deg.reduced_span(r, c);
  }
  QVec out;
  out.reserve(deg.standard_positions.size());
  for (auto c : deg.standard_positions) out.push_back(v[c]);
  return out;
}

QMat GradedQuotient::multiplication_matrix(std::size_t var, int m) const {
  if (var >= nvars()) throw PreconditionError("variable index out of range");
  const auto& from = standard_monomials(m);
  QMat out(dim(m + 1), from.size());
  const Poly x = Poly::variable(nvars(), var);
  for (std::size_t j = 0; j < from.size(); ++j) {
    const QVec c = reduce(x * Poly::from_monomial(from[j]), m + 1);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

// ---------------------------------------------------------------- profiles

std::string to_string(MilnorClass c) {
  switch (c) {
    case MilnorClass::Artinian: return "artinian";
    case MilnorClass::Stable: return "stable";
    case MilnorClass::Undetermined: return "undetermined";
  }
  return "undetermined";
}

int artinian_bound(std::size_t nvars, int d, int k) {
  return static_cast<int>(nvars) * (d - k - 1) + 1;
}

int default_milnor_cap(std::size_t nvars, int d, int k) { return artinian_bound(nvars, d, k) + 1; }

MilnorProfile milnor_profile(const Poly& f, int k, int m_cap) {
  const int d = homogeneous_degree(f);
  const auto ideal = jac_gens(f, k);
  const std::size_t n1 = f.nvars();

  MilnorProfile p;
  p.order = k;
  p.certification_bound = artinian_bound(n1, d, k);
  p.m_cap = m_cap < 0 ? default_milnor_cap(n1, d, k) : m_cap;

  bool vanished = false;
  for (int m = 0; m <= p.m_cap; ++m) {
    if (vanished) {
      p.dims.push_back(0);
      continue;
    }
    const std::size_t full = monomial_count(n1, m);
    const std::size_t value = m < d - k ? full : full - ideal_dim(ideal, m);
    p.dims.push_back(value);
    // J^k is generated in one degree, so I_m = R_m persists upward.
    if (value == 0) {
      vanished = true;
      p.vanishing_degree = m;
    }
  }

  if (vanished) {
    p.classification = MilnorClass::Artinian;
  } else if (p.m_cap >= p.certification_bound && p.m_cap >= 2) {
    const std::size_t last = p.dims[p.m_cap];
    if (p.dims[p.m_cap - 1] == last && p.dims[p.m_cap - 2] == last) {
      p.classification = MilnorClass::Stable;
      p.tail_value = last;
      int from = p.m_cap;
      while (from > 0 && p.dims[from - 1] == last) --from;
      p.tail_from = from;
    }
  }
  return p;
}

bool is_artinian(const Poly& f, int k) {
  const int d = homogeneous_degree(f);
  return milnor_profile(f, k, artinian_bound(f.nvars(), d, k)).classification ==
         MilnorClass::Artinian;
}

std::optional<std::size_t> tjurina_sum(const Poly& f, int k) {
  const auto p = milnor_profile(f, k);
  if (p.classification != MilnorClass::Stable) return std::nullopt;
  return p.tail_value;
}

// ---------------------------------------------------------------- Hessian

Poly hessian_determinant(const Poly& f) {
  const std::size_t n = f.nvars();
  PolyMat h(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Poly fi = diff(f, i);
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = diff(fi, j);
      h(j, i) = h(i, j);
    }
  }
  return determinant(h);
}

HessianMembership hessian_membership(const Poly& f) {
  const int d = homogeneous_degree(f);
  HessianMembership out;
  out.hessian = hessian_determinant(f);
  out.degree = (d - 2) * static_cast<int>(f.nvars());
  if (out.hessian.is_zero()) {
    out.member = true;
    out.zero_hessian = true;
    return out;
  }
  if (out.hessian.max_degree() != out.degree || !out.hessian.is_homogeneous())
    throw InternalError("Hessian has unexpected degree");

  std::vector<Poly> partials;
  for (std::size_t i = 0; i < f.nvars(); ++i) partials.push_back(diff(f, i));
  const int shift = out.degree - (d - 1);
  if (shift < 0) return out;

  const MonomialIndex rows(monomials_of_degree(f.nvars(), out.degree));
  const auto multipliers = monomials_of_degree(f.nvars(), shift);
  std::vector<QVec> columns;
  for (const auto& g : partials)
    for (const auto& mu : multipliers)
      columns.push_back(coordinates(Poly::from_monomial(mu) * g, rows));
  const QMat span = QMat::from_columns(rows.size(), columns);
  const QVec target = coordinates(out.hessian, rows);
  if (auto cert = in_column_space(span, target)) {
    // Independent back-substitution through polynomial arithmetic.
    Poly rebuilt(f.nvars());
    std::size_t idx = 0;
    for (const auto& g : partials)
      for (const auto& mu : multipliers) {
        if (sgn((*cert)[idx]) != 0) rebuilt += Poly::from_monomial(mu, (*cert)[idx]) * g;
        ++idx;
      }
    if (rebuilt != out.hessian) throw InternalError("Hessian membership certificate is invalid");
    out.member = true;
    out.certificate = std::move(*cert);
  }
  return out;
}

// ---------------------------------------------------------------- Lefschetz

QuotientLefschetzReport quotient_lefschetz(const GradedQuotient& quotient, int i, int j,
                                           const Poly& L) {
  if (!(j > i && i >= 0)) throw PreconditionError("quotient_lefschetz needs j > i >= 0");
  if (L.nvars() != quotient.nvars() || L.is_zero() || !L.is_homogeneous() || L.max_degree() != 1)
    throw PreconditionError("L must be a nonzero linear form");
  QuotientLefschetzReport rep;
  rep.from = i;
  rep.to = j;
  rep.dim_from = quotient.dim(i);
  rep.dim_to = quotient.dim(j);
  const Poly power = pow(L, static_cast<unsigned>(j - i));
  std::vector<QVec> columns;
  for (const auto& b : quotient.standard_monomials(i))
    columns.push_back(quotient.reduce(Poly::from_monomial(b) * power, j));
  rep.rank = columns.empty() ? 0 : rank(QMat::from_columns(rep.dim_to, columns));
  rep.maximal = rep.rank == std::min(rep.dim_from, rep.dim_to);
  return rep;
}

QuotientLefschetzReport quotient_lefschetz(const GradedIdealPresentation& ideal, int i, int j,
                                           const Poly& L) {
  return quotient_lefschetz(GradedQuotient(ideal), i, j, L);
}

// ---------------------------------------------------------------- multiplicity

int multiplicity_at(const Poly& f, std::span<const Rational> p) {
  const std::size_t n = f.nvars();
  if (p.size() != n) throw PreconditionError("point has wrong number of coordinates");
  std::size_t q = n;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(p[i]) != 0) {
      q = i;
      break;
    }
  if (q == n) throw PreconditionError("the zero vector is not a projective point");

  // x = T y with T e_0 = p and the remaining columns the unit vectors e_i, i != q.
  std::vector<Poly> images;
  std::size_t next = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Poly xi = Poly::variable(n, 0) * p[i];
    if (i != q) xi += Poly::variable(n, next++);
    images.push_back(std::move(xi));
  }
  const Poly g = substitute(f, images);
  if (g.is_zero()) throw PreconditionError("multiplicity of the zero polynomial");
  int order = kMaxDegree + 1;
  for (const auto& t : g.terms()) order = std::min(order, t.monomial.degree() - t.monomial[0]);
  return order;
}

}  // namespace apolar
