#pragma once

#include "apolar/poly.hpp"

#include <cstdint>
#include <random>

namespace apolar {

/// Coordinates of random evaluation points are drawn from [-range, range].
inline constexpr long kDefaultSampleRange = 1'000'000;

/// Deterministic integer sampler. Uses a plain modulo reduction of
/// mt19937_64 output so that sequences agree across standard libraries.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed, long range = kDefaultSampleRange)
      : engine_(seed), range_(range) {}

  long integer() { return static_cast<long>(engine_() % (2 * range_ + 1)) - range_; }
  long integer(long range) { return static_cast<long>(engine_() % (2 * range + 1)) - range; }

  PointQ point(std::size_t nvars);
  /// a_0 x_0 + ... + a_{n-1} x_{n-1} with random integer coefficients.
  Poly linear_form(std::size_t nvars);
  /// Homogeneous form with every coefficient drawn from [-coeff_range, coeff_range].
  Poly form(std::size_t nvars, int degree, long coeff_range);

private:
  std::mt19937_64 engine_;
  long range_;
};

/// Coefficient vector of a linear form.
PointQ linear_coefficients(const Poly& L);

}  // namespace apolar
