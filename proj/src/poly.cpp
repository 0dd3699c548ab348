#include "apolar/poly.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace apolar {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) : exps_(nvars, 0) {}

Monomial::Monomial(std::vector<std::uint16_t> exponents) : exps_(std::move(exponents)) {
  int d = 0;
  for (auto e : exps_) d += e;
  if (d > kMaxDegree)
    throw PreconditionError("monomial degree " + std::to_string(d) + " exceeds the cap of " +
                            std::to_string(kMaxDegree));
  degree_ = d;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw PreconditionError("variable index out of range");
  std::vector<std::uint16_t> e(nvars, 0);
  e[i] = 1;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw PreconditionError("monomial quotient is not exact");
  std::vector<std::uint16_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exps_[i];
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw PreconditionError("monomial variable counts differ");
  std::vector<std::uint16_t> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
  return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  return a.exps_ <=> b.exps_;
}

std::string Monomial::to_string(char var) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- Poly

namespace {

struct Descending {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

using Accumulator = std::map<Monomial, Rational, Descending>;

Poly from_accumulator(std::size_t nvars, Accumulator&& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  return Poly::from_terms(nvars, std::move(terms));
}

void check_same_ring(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    throw PreconditionError("polynomials live in rings with " + std::to_string(a.nvars()) +
                            " and " + std::to_string(b.nvars()) + " variables");
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  return from_monomial(Monomial::variable(nvars, i));
}

Poly Poly::from_monomial(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.nvars() != nvars) throw PreconditionError("term has wrong variable count");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  Poly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (sgn(p.terms_.back().coefficient) == 0) p.terms_.pop_back();
    } else if (sgn(t.coefficient) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

int Poly::max_degree() const {
  return terms_.empty() ? -1 : terms_.front().monomial.degree();
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_ring(*this, other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (sgn(c) != 0) merged.push_back({std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& t : a.terms_) t.coefficient = -t.coefficient;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Accumulator acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
  return from_accumulator(a.nvars(), std::move(acc));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

std::string Poly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (sgn(c) < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    const bool unit = (c == 1);
    if (t.monomial.degree() == 0) {
      out += c.get_str();
    } else {
      if (!unit) {
        out += c.get_str();
        out += '*';
      }
      out += t.monomial.to_string(var);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(p.nvars(), 1);
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly diff(const Poly& p, std::size_t i) {
  if (i >= p.nvars()) throw PreconditionError("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const auto e = t.monomial[i];
    if (e == 0) continue;
    std::vector<std::uint16_t> ex(t.monomial.exponents().begin(), t.monomial.exponents().end());
    ex[i] -= 1;
    terms.push_back({Monomial(std::move(ex)), t.coefficient * e});
  }
  return Poly::from_terms(p.nvars(), std::move(terms));
}

Poly apply_op(const Poly& alpha, const Poly& f) {
  check_same_ring(alpha, f);
  if (alpha.is_zero() || f.is_zero()) return Poly(f.nvars());
  if (!alpha.is_homogeneous() || !f.is_homogeneous())
    throw PreconditionError("apply_op requires homogeneous operator and form");
  if (alpha.max_degree() > f.max_degree()) return Poly(f.nvars());

  Accumulator acc;
  for (const auto& a : alpha.terms()) {
    for (const auto& b : f.terms()) {
      if (!a.monomial.divides(b.monomial)) continue;
      // d^a x^b = prod b_i! / (b_i - a_i)! * x^(b-a)
      Integer scale = 1;
      for (std::size_t i = 0; i < f.nvars(); ++i)
        for (unsigned k = 0; k < a.monomial[i]; ++k) scale *= (b.monomial[i] - k);
      acc[b.monomial.quotient(a.monomial)] += a.coefficient * b.coefficient * Rational(scale);
    }
  }
  return from_accumulator(f.nvars(), std::move(acc));
}

Rational eval(const Poly& p, std::span<const Rational> point) {
  if (point.size() != p.nvars())
    throw PreconditionError("evaluation point has " + std::to_string(point.size()) +
                            " coordinates, expected " + std::to_string(p.nvars()));
  // Cache powers per variable up to the largest exponent used.
  std::vector<std::vector<Rational>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) powers[i].push_back(1);
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      const auto e = t.monomial[i];
      while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * point[i]);
      if (e) v *= powers[i][e];
    }
    total += v;
  }
  return total;
}

int homogeneous_degree(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("the zero polynomial has no degree");
  if (!p.is_homogeneous()) throw PreconditionError("polynomial is not homogeneous");
  return p.max_degree();
}

namespace {

void enumerate(std::size_t var, int remaining, std::vector<std::uint16_t>& cur,
               std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = static_cast<std::uint16_t>(remaining);
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = static_cast<std::uint16_t>(e);
    enumerate(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int deg) {
  if (deg < 0) throw PreconditionError("negative degree");
  if (deg > kMaxDegree) throw PreconditionError("degree exceeds the cap");
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (deg == 0) out.emplace_back(0);
    return out;
  }
  out.reserve(monomial_count(nvars, deg));
  std::vector<std::uint16_t> cur(nvars, 0);
  enumerate(0, deg, cur, out);
  return out;
}

std::size_t monomial_count(std::size_t nvars, int deg) {
  if (deg < 0) return 0;
  if (nvars == 0) return deg == 0 ? 1 : 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), nvars - 1 + static_cast<unsigned long>(deg),
               static_cast<unsigned long>(deg));
  return c.get_ui();
}

Poly substitute(const Poly& f, std::span<const Poly> images) {
  if (images.size() != f.nvars()) throw PreconditionError("substitution needs one image per variable");
  if (images.empty()) return f;
  const std::size_t target = images.front().nvars();
  Poly out(target);
  std::vector<std::vector<Poly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].nvars() != target) throw PreconditionError("substitution images disagree");
    powers[i].push_back(Poly::constant(target, 1));
  }
  for (const auto& t : f.terms()) {
    Poly term = Poly::constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const auto e = t.monomial[i];
      while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
      if (e) term = term * powers[i][e];
    }
    out += term;
  }
  return out;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  lookup_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], i);
}

std::size_t MonomialIndex::index_of(const Monomial& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) throw PreconditionError("monomial " + m.to_string() + " not in basis");
  return it->second;
}

std::vector<Rational> coordinates(const Poly& p, const MonomialIndex& index) {
  std::vector<Rational> v(index.size());
  for (const auto& t : p.terms()) v[index.index_of(t.monomial)] = t.coefficient;
  return v;
}

}  // namespace apolar
