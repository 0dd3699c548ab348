#include "apolar/errors.hpp"
#include "apolar/report.hpp"

#include <gtest/gtest.h>

using namespace apolar;

TEST(Report, DeterministicJson) {
  Options o;
  o.seed = 4;
  const Input in = Input::from_example("caporali2");
  const std::string a = make_document(in, o, analysis_report(in, o)).dump();
  const std::string b = make_document(in, o, analysis_report(in, o)).dump();
  EXPECT_EQ(a, b);
}

TEST(Report, SchemaShapes) {
  const Input in = Input::from_example("quartic-e6");
  Options o;
  const json doc = make_document(in, o, analysis_report(in, o));
  EXPECT_TRUE(doc.contains("input"));
  EXPECT_EQ(doc["seed"], 0);
  EXPECT_EQ(doc["analyses"]["hilbert"]["dims"], json::parse("[1,3,3,3,1]"));
  const json& m2 = doc["analyses"]["milnor"]["2"];
  EXPECT_EQ(m2["polynomial"], json::parse("[1,3,3]"));
  EXPECT_EQ(m2["tail_value"], 2);
  EXPECT_EQ(m2["tail_from"], 3);
  const json& betti = doc["analyses"]["betti"]["table"];
  ASSERT_TRUE(betti.is_array());
  EXPECT_EQ(betti[0], json::parse(R"({"i":0,"j":0,"beta":1})"));
  EXPECT_TRUE(doc["analyses"]["lefschetz"].contains("trials"));
  EXPECT_TRUE(doc["analyses"]["lefschetz"].contains("seed"));
}

TEST(Report, VerifyPaperFixtures) {
  Options o;
  for (const char* name : {"fermat:2:4", "caporali", "quartic-4a1", "triangle"}) {
    const json v = verify_paper(Input::from_example(name), o);
    EXPECT_TRUE(v["pass"].get<bool>()) << name << " " << v.dump();
  }
  EXPECT_THROW(verify_paper(Input::from_poly("x0*x1*x2", 3), o), PreconditionError);
}

TEST(Report, ConeInputSkipsAnalyses) {
  const Input in = Input::from_poly("x0^3+x1^3", 3);
  const json r = analysis_report(in, Options{});
  EXPECT_TRUE(r["cone"].get<bool>());
  EXPECT_EQ(r["betti"], "skipped: input is a cone");
  EXPECT_TRUE(r["milnor"].contains("1"));
}

TEST(Report, InputErrors) {
  EXPECT_THROW(Input::from_poly("x0+x1^2", 2), PreconditionError);
  EXPECT_THROW(Input::from_poly("0", 2), PreconditionError);
  EXPECT_THROW(Input::from_poly("x0*", 2), ParseError);
  EXPECT_THROW(Input::from_example("missing"), PreconditionError);
}

TEST(Report, JacobianLefschetz) {
  Options o;
  o.quotient = "jacobian";
  const json r = analysis_lefschetz(Input::from_example("caporali"), o);
  EXPECT_TRUE(r["artinian"].get<bool>());
  EXPECT_TRUE(r["wlp"].get<bool>());
  EXPECT_EQ(r["top_degree"], 6);
  const json s = analysis_lefschetz(Input::from_example("quartic-e6"), o);
  EXPECT_TRUE(s["slp"].is_null());
}

TEST(Report, BettiGrid) {
  Options o;
  const json b = analysis_betti(Input::from_example("caporali1"), o);
  const std::string grid = b["grid"];
  EXPECT_NE(grid.find("total:"), std::string::npos);
  EXPECT_NE(grid.find("    2:    .   7   7   ."), std::string::npos) << grid;
}

TEST(Report, HessExperimentShape) {
  const json e = experiment_hessian_membership(3, 4, 3, 1);
  EXPECT_EQ(e["samples"].size(), 3u);
  for (const auto& s : e["samples"]) EXPECT_GE(s["multiplicity_at_e0"].get<int>(), 2);
}
