#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace apolar {

using Integer = mpz_class;
/// Always canonical: lowest terms, positive denominator, zero is 0/1.
using Rational = mpq_class;
/// A point of affine space over Q, one coordinate per variable.
using PointQ = std::vector<Rational>;

/// Hard cap on the total degree of any monomial.
inline constexpr int kMaxDegree = 64;

Rational make_rational(long num, long den = 1);
Rational factorial(unsigned n);

/// Exponent vector x0^e0 * ... * x{n-1}^e{n-1}.
///
/// Ordered graded-lexicographically: higher total degree is larger, ties are
/// broken lexicographically with x0 > x1 > ... .
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  explicit Monomial(std::vector<std::uint16_t> exponents);

  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint16_t> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  /// Requires divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string(char var = 'x') const;

private:
  std::vector<std::uint16_t> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse polynomial with rational coefficients.
///
/// Terms are kept in strictly descending graded-lex order with no zero
/// coefficients; the zero polynomial has no terms. The same type represents
/// differential operators, where variable i is read as d/dx_i (see apply_op).
class Poly {
public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly from_monomial(const Monomial& m, const Rational& c = 1);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  bool is_homogeneous() const;
  /// Largest total degree of a term; -1 for the zero polynomial.
  int max_degree() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string(char var = 'x') const;

private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly pow(const Poly& p, unsigned e);

/// Partial derivative with respect to x_i.
Poly diff(const Poly& p, std::size_t i);

/// Apolarity action: the operator alpha (variable i read as d/dx_i) applied to
/// f. Both arguments must be homogeneous; a zero argument gives zero.
Poly apply_op(const Poly& alpha, const Poly& f);

Rational eval(const Poly& p, std::span<const Rational> point);

/// Degree of a nonzero homogeneous polynomial; throws PreconditionError
/// otherwise.
int homogeneous_degree(const Poly& p);

/// All monomials of total degree `deg` in descending graded-lex order
/// (x0^deg first).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int deg);

/// C(nvars - 1 + deg, deg).
std::size_t monomial_count(std::size_t nvars, int deg);

/// f(images[0], ..., images[nvars-1]). All images share one variable count.
Poly substitute(const Poly& f, std::span<const Poly> images);

/// Position lookup into a fixed monomial list.
class MonomialIndex {
public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  /// Throws PreconditionError if absent.
  std::size_t index_of(const Monomial& m) const;
  bool contains(const Monomial& m) const { return lookup_.count(m) != 0; }

private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> lookup_;
};

/// Coefficient vector of a homogeneous polynomial against a monomial list.
std::vector<Rational> coordinates(const Poly& p, const MonomialIndex& index);

/// Parses an expression over x0..x{nvars-1}: integer literals, `+ - * / ^`
/// and parentheses. Division is only by nonzero constants and exponents are
/// nonnegative integer literals. The result is fully expanded.
Poly parse_poly(std::string_view text, std::size_t nvars, char var = 'x');

}  // namespace apolar
