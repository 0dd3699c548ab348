// apolar: command-line front end for the apolar library.

#include "apolar/errors.hpp"
#include "apolar/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

using namespace apolar;

namespace {

struct Args {
  std::string example;
  std::string poly;
  std::size_t nvars = 0;
  std::string format = "json";
  std::string out;
  std::optional<std::uint64_t> seed;
  Options opt;
  bool verify = false;
  int degree = 4;
  int samples = 10;
};

void add_common(CLI::App* sub, Args& a, bool needs_input = true) {
  if (needs_input) {
    auto* ex = sub->add_option("--example", a.example, "fixture name (see `apolar fixtures`)");
    auto* po = sub->add_option("--poly", a.poly, "homogeneous form in x0..x{N-1}");
    sub->add_option("--nvars", a.nvars, "number of variables for --poly");
    ex->excludes(po);
  }
  sub->add_option("--format", a.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", a.out, "write the report here instead of stdout");
  sub->add_option("--seed", a.seed, "random seed (falls back to $APOLAR_SEED, then 0)");
  sub->add_option("--trials", a.opt.trials, "random evaluation trials")->check(CLI::PositiveNumber);
}

Input read_input(const Args& a) {
  if (!a.example.empty()) return Input::from_example(a.example);
  if (a.poly.empty()) throw PreconditionError("give --example NAME or --poly EXPR --nvars N");
  if (a.nvars == 0) throw PreconditionError("--poly needs --nvars");
  return Input::from_poly(a.poly, a.nvars);
}

std::uint64_t resolve_seed(const Args& a) {
  if (a.seed) return *a.seed;
  if (const char* env = std::getenv("APOLAR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("APOLAR_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

void emit(const Args& a, const json& doc, const json& timings) {
  const std::string text = a.format == "json" ? doc.dump(2) + "\n" : render_text(doc, timings);
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw PreconditionError("cannot write " + a.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apolar algebras, higher Jacobians and Milnor algebras of homogeneous forms"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  Args a;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert vector and bases of A(f)");
  add_common(hilbert, a);

  auto* milnor = app.add_subcommand("milnor", "Hilbert function of M^k(f) with Artinian verdict");
  add_common(milnor, a);
  milnor->add_option("--order", a.opt.order, "derivative order k");
  milnor->add_option("--cap", a.opt.cap, "last degree to compute");

  auto* hessian = app.add_subcommand("hessian", "mixed Hessian Hess^(k,l)");
  add_common(hessian, a);
  hessian->add_option("--k", a.opt.k, "column degree");
  hessian->add_option("--l", a.opt.l, "row degree");

  auto* lefschetz = app.add_subcommand("lefschetz", "weak and strong Lefschetz verdicts");
  add_common(lefschetz, a);
  lefschetz->add_option("--quotient", a.opt.quotient, "apolar or jacobian")
      ->check(CLI::IsMember({"apolar", "jacobian"}));
  lefschetz->add_option("--order", a.opt.order, "Jacobian order for --quotient jacobian");
  lefschetz->add_option("--cap", a.opt.cap, "degree cap for non-Artinian quotients");

  auto* betti = app.add_subcommand("betti", "graded Betti table via Koszul homology");
  add_common(betti, a);
  betti->add_option("--cap", a.opt.cap, "largest internal degree j");
  betti->add_option("--quotient", a.opt.quotient, "apolar or jacobian")
      ->check(CLI::IsMember({"apolar", "jacobian"}));
  betti->add_option("--order", a.opt.order, "Jacobian order for --quotient jacobian");

  auto* report = app.add_subcommand("report", "run every analysis");
  add_common(report, a);
  report->add_flag("--verify-paper", a.verify, "compare against recorded values; exit 1 on mismatch");

  auto* experiment = app.add_subcommand(
      "hess-experiment", "test hess_f in J(f) on random forms singular at (1:0:...:0)");
  add_common(experiment, a, false);
  experiment->add_option("--nvars", a.nvars, "number of variables")->required();
  experiment->add_option("--degree", a.degree, "degree of the sampled forms");
  experiment->add_option("--samples", a.samples, "number of forms");

  auto* fixtures = app.add_subcommand("fixtures", "list the fixture catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixtures->parsed()) {
      for (const auto& name : fixture_names()) {
        std::cout << name;
        if (name != "fermat:n:d") {
          const Fixture f = find_fixture(name);
          std::cout << "  [" << f.nvars << " vars, degree " << f.degree << "]  " << f.expression
                    << "  -- " << f.note;
        }
        std::cout << '\n';
      }
      return 0;
    }

    a.opt.seed = resolve_seed(a);
    json timings = json::object();
    auto timed = [&](const std::string& name, const std::function<json()>& fn) {
      const auto t0 = std::chrono::steady_clock::now();
      json r = fn();
      timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    };

    if (experiment->parsed()) {
      const json r = timed("hess-experiment", [&] {
        return experiment_hessian_membership(a.nvars, a.degree, a.samples, a.opt.seed);
      });
      emit(a, json{{"seed", a.opt.seed}, {"version", version()}, {"analyses", {{"hess_experiment", r}}}},
           timings);
      return 0;
    }

    const Input in = read_input(a);
    json analyses = json::object();
    int status = 0;
    if (hilbert->parsed()) analyses["hilbert"] = timed("hilbert", [&] { return analysis_hilbert(in); });
    if (milnor->parsed())
      analyses["milnor"] = timed("milnor", [&] { return analysis_milnor(in, a.opt.order, a.opt.cap); });
    if (hessian->parsed()) analyses["hessian"] = timed("hessian", [&] { return analysis_hessian(in, a.opt); });
    if (lefschetz->parsed())
      analyses["lefschetz"] = timed("lefschetz", [&] { return analysis_lefschetz(in, a.opt); });
    if (betti->parsed()) analyses["betti"] = timed("betti", [&] { return analysis_betti(in, a.opt); });
    if (report->parsed()) {
      analyses = timed("report", [&] { return analysis_report(in, a.opt); });
      if (a.verify) {
        analyses["verify_paper"] = timed("verify", [&] { return verify_paper(in, a.opt); });
        if (!analyses["verify_paper"]["pass"].get<bool>()) status = 1;
      }
    }
    emit(a, make_document(in, a.opt, analyses), timings);
    return status;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
