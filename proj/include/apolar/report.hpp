#pragma once

#include "apolar/betti.hpp"
#include "apolar/fixtures.hpp"
#include "apolar/poly.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace apolar {

using json = nlohmann::json;

struct Input {
  std::string example;  // empty for --poly input
  std::string expression;
  std::size_t nvars = 0;
  Poly form;
  std::optional<Fixture> fixture;

  static Input from_example(const std::string& name);
  static Input from_poly(const std::string& expression, std::size_t nvars);
  json to_json() const;
};

struct Options {
  std::uint64_t seed = 0;
  int trials = 3;
  int order = 1;       // Milnor order k
  int cap = -1;        // degree cap; < 0 selects the default
  int k = 1;           // Hessian column degree
  int l = 1;           // Hessian row degree
  std::string quotient = "apolar";  // apolar | jacobian
};

json analysis_hilbert(const Input& in);
json analysis_milnor(const Input& in, int order, int cap);
json analysis_hessian(const Input& in, const Options& opt);
json analysis_lefschetz(const Input& in, const Options& opt);
json analysis_betti(const Input& in, const Options& opt);
json analysis_membership(const Input& in);
json analysis_polar(const Input& in, int k, const Options& opt);
/// Every analysis that applies; a cone input records the skipped ones.
json analysis_report(const Input& in, const Options& opt);

/// Value of a golden key (see fixtures.cpp) computed from scratch.
json golden_value(const Input& in, const std::string& key, const Options& opt);
/// {"checks":[{key,expected,actual,pass}], "pass": bool}
json verify_paper(const Input& in, const Options& opt);

/// Samples forms singular at (1:0:...:0) and tests hess_f in J(f).
json experiment_hessian_membership(std::size_t nvars, int degree, int samples, std::uint64_t seed);

json betti_to_json(const BettiTable& table);
/// Macaulay-style grid: column i, row j-i.
std::string betti_grid(const BettiTable& table);

/// {input, seed, trials, version, analyses}
json make_document(const Input& in, const Options& opt, json analyses);

/// Human-readable rendering of a document. Timings go here only.
std::string render_text(const json& document, const json& timings = json::object());

std::string version();

}  // namespace apolar
