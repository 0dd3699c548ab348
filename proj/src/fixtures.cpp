#include "apolar/fixtures.hpp"

#include "apolar/errors.hpp"

#include <charconv>

namespace apolar {

namespace {

PointQ pt(std::initializer_list<long> c) {
  PointQ p;
  for (long v : c) p.emplace_back(v);
  return p;
}

const char* kSmoothM1 = R"({"class":"artinian","hilbert":[1,3,6,7,6,3,1]})";

// Minimal resolutions as arrays of {i,j,beta}.
const char* kBettiFermat =
    R"([{"beta":1,"i":0,"j":0},{"beta":3,"i":1,"j":2},{"beta":2,"i":1,"j":4},{"beta":2,"i":2,"j":3},{"beta":3,"i":2,"j":5},{"beta":1,"i":3,"j":7}])";
const char* kBettiCI223 =
    R"([{"beta":1,"i":0,"j":0},{"beta":2,"i":1,"j":2},{"beta":1,"i":1,"j":3},{"beta":1,"i":2,"j":4},{"beta":2,"i":2,"j":5},{"beta":1,"i":3,"j":7}])";
const char* kBettiGeneric =
    R"([{"beta":1,"i":0,"j":0},{"beta":7,"i":1,"j":3},{"beta":7,"i":2,"j":4},{"beta":1,"i":3,"j":7}])";
const char* kBettiCa2 =
    R"([{"beta":1,"i":0,"j":0},{"beta":2,"i":1,"j":2},{"beta":2,"i":1,"j":3},{"beta":1,"i":1,"j":4},{"beta":1,"i":2,"j":3},{"beta":2,"i":2,"j":4},{"beta":2,"i":2,"j":5},{"beta":1,"i":3,"j":7}])";
const char* kBetti4A1 =
    R"([{"beta":1,"i":0,"j":0},{"beta":1,"i":1,"j":2},{"beta":4,"i":1,"j":3},{"beta":4,"i":2,"j":4},{"beta":1,"i":2,"j":5},{"beta":1,"i":3,"j":7}])";

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> c;
  c.push_back({"caporali", 3, 4, "x0^4+x1^4+x2^4+(x0+x1+x2)^4", "smooth Caporali quartic", {},
               {{"hilbert_A", "[1,3,4,3,1]"},
                {"milnor.1", kSmoothM1},
                {"milnor.2", R"({"class":"artinian","hilbert":[1,3,2]})"},
                {"betti", kBettiCI223},
                {"hessian_in_jacobian", "false"}}});
  c.push_back({"caporali1", 3, 4, "x0^4+x1^4+x2^4+(x0^2+x1^2+x2^2)^2", "smooth quartic, generic A(f)", {},
               {{"hilbert_A", "[1,3,6,3,1]"},
                {"milnor.1", kSmoothM1},
                {"milnor.2", R"({"class":"artinian","hilbert":[1,3]})"},
                {"betti", kBettiGeneric},
                {"hessian_in_jacobian", "false"}}});
  c.push_back({"caporali2", 3, 4, "x0^4+x1^4+x2^4+(x0^2+x1^2)^2", "smooth quartic", {},
               {{"hilbert_A", "[1,3,4,3,1]"},
                {"milnor.1", kSmoothM1},
                {"milnor.2", R"({"class":"artinian","hilbert":[1,3,2]})"},
                {"betti", kBettiCa2},
                {"hessian_in_jacobian", "false"}}});
  c.push_back({"quartic-e6", 3, 4, "x0^3*x1+x2^4", "rational quartic with one E6 point at (0:1:0)",
               {pt({0, 1, 0})},
               {{"hilbert_A", "[1,3,3,3,1]"},
                {"milnor.1", R"({"class":"stable","polynomial":[1,3,6,7,7],"tail_from":5,"tail_value":6})"},
                {"milnor.2", R"({"class":"stable","polynomial":[1,3,3],"tail_from":3,"tail_value":2})"},
                {"betti", kBettiFermat},
                {"hessian_in_jacobian", "true"}}});
  c.push_back({"quartic-3a2", 3, 4, "x0^2*x1^2+x1^2*x2^2+x0^2*x2^2-2*x0*x1*x2*(x0+x1+x2)",
               "tricuspidal quartic, cusps at the coordinate points",
               {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})},
               {{"hilbert_A", "[1,3,6,3,1]"},
                {"milnor.1", R"({"class":"stable","polynomial":[1,3,6,7],"tail_from":4,"tail_value":6})"},
                {"milnor.2", R"({"class":"artinian","hilbert":[1,3]})"},
                {"betti", kBettiGeneric},
                {"hessian_in_jacobian", "true"}}});
  c.push_back({"quartic-2a3", 3, 4, "x0^2*x1^2+x2^4", "quartic with two A3 points",
               {pt({1, 0, 0}), pt({0, 1, 0})},
               {{"hilbert_A", "[1,3,4,3,1]"},
                {"milnor.1", R"({"class":"stable","polynomial":[1,3,6,7,7],"tail_from":5,"tail_value":6})"},
                {"milnor.2", R"({"class":"artinian","hilbert":[1,3,2]})"},
                {"betti", kBettiCa2},
                {"hessian_in_jacobian", "true"}}});
  // The four nodes are not rational points.
  c.push_back({"quartic-4a1", 3, 4, "(x0^2+x1^2)^2+(x1^2+x2^2)^2", "two conics meeting in four nodes", {},
               {{"hilbert_A", "[1,3,5,3,1]"},
                {"milnor.1", R"({"class":"stable","polynomial":[1,3,6,7,6],"tail_from":5,"tail_value":4})"},
                {"milnor.2", R"({"class":"artinian","hilbert":[1,3,1]})"},
                {"betti", kBetti4A1},
                {"hessian_in_jacobian", "true"}}});
  c.push_back({"lines-3x", 3, 4, "(x0^3+x1^3)*x2", "three concurrent lines plus a transversal",
               {pt({0, 0, 1}), pt({1, -1, 0})},
               {{"hilbert_A", "[1,3,4,3,1]"}, {"betti", kBettiCI223}}});
  c.push_back({"lines-4", 3, 4, "x0*x1*x2*(x0+x1+x2)", "four general lines",
               {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, -1, 0}), pt({1, 0, -1}), pt({0, 1, -1})},
               {{"betti", kBettiGeneric}}});
  // Paper letters x,y,z,u,v -> x0,x1,x2,x3,x4.
  c.push_back({"gn-quintic", 5, 4, "x0*x3^3+x1*x3^2*x4+x2*x3*x4^2+x4^4",
               "Gordan-Noether type quartic in five variables", {},
               {{"hess.2.zero", "true"}, {"hess12.rank", "5"}, {"polar.2.degenerate", "false"}}});
  // Paper letters x,y,u,v -> x0,x1,x2,x3.
  c.push_back({"ikeda", 4, 5, "x0*x2*x3^3+x1*x2^3*x3+x0^2*x1^3", "Ikeda's quintic surface", {},
               {{"hess.1.zero", "false"},
                {"hess.2.zero", "true"},
                {"dim_A.2", "10"},
                {"polar.2.degenerate", "false"},
                {"slp", "false"}}});
  c.push_back({"triangle", 3, 3, "x0*x1*x2", "coordinate triangle; A(f) = Q/(X0^2,X1^2,X2^2)",
               {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})},
               {{"slp", "true"}}});
  return c;
}

int parse_int(const std::string& s, const std::string& name) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw PreconditionError("bad fixture name '" + name + "'");
  return v;
}

Fixture fermat(const std::string& name) {
  const auto a = name.find(':');
  const auto b = name.find(':', a + 1);
  if (b == std::string::npos) throw PreconditionError("expected fermat:n:d, got '" + name + "'");
  const int n = parse_int(name.substr(a + 1, b - a - 1), name);
  const int d = parse_int(name.substr(b + 1), name);
  if (n < 0 || n > 15 || d < 1 || d > kMaxDegree)
    throw PreconditionError("fermat:n:d needs 0 <= n <= 15 and 1 <= d <= " + std::to_string(kMaxDegree));
  Fixture f;
  f.name = name;
  f.nvars = n + 1;
  f.degree = d;
  for (int i = 0; i <= n; ++i)
    f.expression += (i ? "+x" : "x") + std::to_string(i) + "^" + std::to_string(d);
  f.note = "Fermat form";
  if (n == 2 && d == 4)
    f.goldens = {{"hilbert_A", "[1,3,3,3,1]"},
                 {"milnor.1", kSmoothM1},
                 {"milnor.2", R"({"class":"artinian","hilbert":[1,3,3,1]})"},
                 {"betti", kBettiFermat},
                 {"hessian_in_jacobian", "false"},
                 {"slp", "true"}};
  return f;
}

}  // namespace

Poly Fixture::poly() const { return parse_poly(expression, nvars); }

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

Fixture find_fixture(const std::string& name) {
  if (name.rfind("fermat:", 0) == 0) return fermat(name);
  for (const auto& f : fixture_catalog())
    if (f.name == name) return f;
  throw PreconditionError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out{"fermat:n:d"};
  for (const auto& f : fixture_catalog()) out.push_back(f.name);
  return out;
}

}  // namespace apolar
