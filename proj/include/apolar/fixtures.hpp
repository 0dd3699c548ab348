#pragma once

#include "apolar/poly.hpp"

#include <string>
#include <vector>

namespace apolar {

/// A recorded expectation: `key` names a computed quantity (see report.hpp)
/// and `expected` is its JSON encoding.
struct Golden {
  std::string key;
  std::string expected;
};

struct Fixture {
  std::string name;
  std::size_t nvars = 0;
  int degree = 0;
  std::string expression;
  std::string note;
  std::vector<PointQ> singular_points;  // known singular points, where rational
  std::vector<Golden> goldens;

  Poly poly() const;
};

/// Named fixtures, excluding the parametric fermat:n:d family.
const std::vector<Fixture>& fixture_catalog();

/// Looks up a catalog name or parses fermat:n:d (n+1 variables, degree d).
/// Throws PreconditionError for unknown names.
Fixture find_fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace apolar
