#include "apolar/report.hpp"

#include "apolar/apolar.hpp"
#include "apolar/errors.hpp"
#include "apolar/hessian.hpp"
#include "apolar/milnor.hpp"
#include "apolar/sampling.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace apolar {

namespace {

std::vector<std::string> op_strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string('X'));
  return out;
}

std::vector<std::string> op_strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string('X'));
  return out;
}

int form_degree(const Poly& f) { return homogeneous_degree(f); }

void require_order(const Poly& f, int k) {
  const int d = form_degree(f);
  if (k < 1 || k >= d)
    throw PreconditionError("order k must satisfy 1 <= k < d = " + std::to_string(d));
}

json generic_rank_json(const GenericRank& g) {
  json j{{"rank", g.rank}, {"max_rank", g.max_rank}, {"maximal", g.maximal},
         {"trials", g.trials}, {"seed", g.seed}};
  j["verdict"] = g.maximal ? "exact"
                           : "no rank increase over " + std::to_string(g.trials) + " trials";
  return j;
}

json milnor_summary(const MilnorProfile& p) {
  json j{{"class", to_string(p.classification)}};
  if (p.classification == MilnorClass::Artinian) {
    j["hilbert"] = std::vector<std::size_t>(p.dims.begin(), p.dims.begin() + p.vanishing_degree);
  } else if (p.classification == MilnorClass::Stable) {
    j["polynomial"] = std::vector<std::size_t>(p.dims.begin(), p.dims.begin() + p.tail_from);
    j["tail_value"] = p.tail_value;
    j["tail_from"] = p.tail_from;
  }
  return j;
}

std::optional<bool> hess_zero(const ApolarAlgebra& A, int k, const Options& opt) {
  const PolyMat h = mixed_hessian(A, k, k);
  if (h.rows() <= kExactDeterminantLimit) return determinant(h).is_zero();
  if (generic_rank(h, opt.trials, opt.seed).maximal) return false;
  return std::nullopt;
}

GradedTables milnor_tables(const Poly& f, int order, int cap) {
  require_order(f, order);
  const int d = form_degree(f);
  if (cap < 0) cap = default_milnor_cap(f.nvars(), d, order);
  return GradedTables::from_quotient(GradedQuotient(jac_gens(f, order)), cap);
}

}  // namespace

std::string version() { return APOLAR_VERSION; }

Input Input::from_example(const std::string& name) {
  Input in;
  in.fixture = find_fixture(name);
  in.example = in.fixture->name;
  in.expression = in.fixture->expression;
  in.nvars = in.fixture->nvars;
  in.form = in.fixture->poly();
  return in;
}

Input Input::from_poly(const std::string& expression, std::size_t nvars) {
  if (nvars == 0) throw PreconditionError("--nvars must be positive");
  Input in;
  in.expression = expression;
  in.nvars = nvars;
  in.form = parse_poly(expression, nvars);
  if (in.form.is_zero()) throw PreconditionError("the zero polynomial is not a form");
  if (!in.form.is_homogeneous()) throw PreconditionError("polynomial is not homogeneous");
  if (in.form.max_degree() < 1) throw PreconditionError("form must have positive degree");
  return in;
}

json Input::to_json() const {
  json j{{"expression", expression},
         {"nvars", nvars},
         {"form", form.to_string()},
         {"degree", form.max_degree()}};
  if (!example.empty()) j["example"] = example;
  return j;
}

json analysis_hilbert(const Input& in) {
  const ApolarAlgebra A(in.form);
  json j{{"socle_degree", A.socle_degree()}};
  std::vector<std::size_t> dims;
  json basis = json::array();
  for (int k = 0; k <= A.socle_degree(); ++k) {
    dims.push_back(A.dim(k));
    basis.push_back(op_strings(A.basis(k)));
  }
  j["dims"] = dims;
  j["basis"] = basis;
  json ann = json::object();
  for (int k = 1; k <= A.socle_degree(); ++k) {
    const auto ops = ann_basis(in.form, k);
    ann[std::to_string(k)] = json{{"dim", ops.size()}};
    if (k == 2) ann["2"]["basis"] = op_strings(ops);
  }
  j["ann"] = ann;
  return j;
}

json analysis_milnor(const Input& in, int order, int cap) {
  require_order(in.form, order);
  const MilnorProfile p = milnor_profile(in.form, order, cap);
  json j = milnor_summary(p);
  j["order"] = p.order;
  j["m_cap"] = p.m_cap;
  j["dims"] = p.dims;
  j["certification_bound"] = p.certification_bound;
  j["artinian"] = p.classification == MilnorClass::Artinian;
  if (p.classification == MilnorClass::Artinian) j["vanishing_degree"] = p.vanishing_degree;
  j["tjurina_sum"] = p.classification == MilnorClass::Stable ? json(p.tail_value) : json(nullptr);
  if (p.classification == MilnorClass::Stable)
    j["note"] = "tail constancy over the last three degrees is a heuristic window";
  if (p.classification == MilnorClass::Undetermined)
    j["note"] = "raise --cap to decide";
  return j;
}

json analysis_hessian(const Input& in, const Options& opt) {
  const ApolarAlgebra A(in.form);
  const PolyMat h = mixed_hessian(A, opt.k, opt.l);
  json entries = json::array();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < h.cols(); ++c) row.push_back(h(r, c).to_string());
    entries.push_back(row);
  }
  json j{{"k", opt.k},
         {"l", opt.l},
         {"rows", h.rows()},
         {"cols", h.cols()},
         {"row_basis", op_strings(h.row_labels)},
         {"col_basis", op_strings(h.col_labels)},
         {"entries", entries},
         {"generic_rank", generic_rank_json(generic_rank(h, opt.trials, opt.seed))}};
  if (h.rows() == h.cols() && h.rows() <= kExactDeterminantLimit) {
    const Poly det = determinant(h);
    j["determinant"] = det.to_string();
    j["determinant_zero"] = det.is_zero();
  } else {
    j["determinant"] = nullptr;
  }
  return j;
}

json analysis_lefschetz(const Input& in, const Options& opt) {
  if (opt.quotient == "apolar") {
    const ApolarAlgebra A(in.form);
    const LefschetzReport r = slp_report(A, opt.trials, opt.seed);
    json levels = json::array();
    for (const auto& v : r.levels) {
      json lv{{"k", v.k}, {"size", v.size}, {"generic_rank", v.generic_rank}, {"maximal", v.maximal}};
      lv["certified_singular"] = v.certified_singular ? json(*v.certified_singular) : json(nullptr);
      lv["verdict"] = v.maximal ? "exact" : (v.certified_singular ? "exact" : "probabilistic");
      levels.push_back(lv);
    }
    json steps = json::array();
    for (const auto& s : r.wlp_steps)
      steps.push_back({{"from", s.from}, {"rank", s.rank}, {"dim_from", s.dim_from},
                       {"dim_to", s.dim_to}, {"maximal", s.maximal}});
    return {{"quotient", "apolar"}, {"slp", r.slp}, {"wlp", r.wlp}, {"levels", levels},
            {"wlp_steps", steps}, {"trials", r.trials}, {"seed", r.seed}};
  }
  if (opt.quotient != "jacobian") throw PreconditionError("--quotient must be apolar or jacobian");

  const int order = opt.order;
  require_order(in.form, order);
  const MilnorProfile p = milnor_profile(in.form, order, opt.cap);
  const GradedQuotient q(jac_gens(in.form, order));
  const int top = p.classification == MilnorClass::Artinian ? p.vanishing_degree - 1 : p.m_cap;
  Sampler sampler(opt.seed);
  std::vector<Poly> forms;
  for (int t = 0; t < opt.trials; ++t) forms.push_back(sampler.linear_form(in.nvars));

  auto best = [&](int i, int j) {
    QuotientLefschetzReport b;
    for (const Poly& L : forms) {
      const auto r = quotient_lefschetz(q, i, j, L);
      if (r.rank >= b.rank) b = r;
      if (b.maximal) break;
    }
    return json{{"from", b.from}, {"to", b.to}, {"rank", b.rank}, {"dim_from", b.dim_from},
                {"dim_to", b.dim_to}, {"maximal", b.maximal}};
  };

  json steps = json::array();
  bool wlp = true;
  for (int i = 0; i < top; ++i) {
    steps.push_back(best(i, i + 1));
    wlp = wlp && steps.back()["maximal"].get<bool>();
  }
  json j{{"quotient", "jacobian"}, {"order", order}, {"top_degree", top}, {"wlp_steps", steps},
         {"trials", opt.trials}, {"seed", opt.seed}, {"artinian", p.classification == MilnorClass::Artinian}};
  if (p.classification == MilnorClass::Artinian) {
    json levels = json::array();
    bool slp = true;
    for (int i = 0; 2 * i < top; ++i) {
      levels.push_back(best(i, top - i));
      slp = slp && levels.back()["maximal"].get<bool>();
    }
    j["levels"] = levels;
    j["slp"] = slp;
    j["wlp"] = wlp;
  } else {
    j["slp"] = nullptr;
    j["wlp"] = nullptr;
    j["note"] = "quotient is not Artinian; steps shown up to the cap";
  }
  return j;
}

json betti_to_json(const BettiTable& table) {
  json arr = json::array();
  for (const auto& [ij, v] : table.values) arr.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", v}});
  return arr;
}

std::string betti_grid(const BettiTable& table) {
  const int N = static_cast<int>(table.nvars);
  int rmax = 0;
  for (const auto& [ij, v] : table.values) rmax = std::max(rmax, ij.second - ij.first);
  std::ostringstream out;
  out << "       ";
  for (int i = 0; i <= N; ++i) out << std::setw(4) << i;
  out << "\ntotal: ";
  for (int i = 0; i <= N; ++i) {
    std::size_t s = 0;
    for (const auto& [ij, v] : table.values)
      if (ij.first == i) s += v;
    out << std::setw(4) << s;
  }
  out << '\n';
  for (int r = 0; r <= rmax; ++r) {
    out << std::setw(5) << r << ": ";
    for (int i = 0; i <= N; ++i) {
      const std::size_t v = table.at(i, i + r);
      if (v) out << std::setw(4) << v;
      else out << std::setw(4) << '.';
    }
    out << '\n';
  }
  if (table.truncated) out << "(truncated: entries need degrees above the cap, j <= " << table.j_cap << ")\n";
  return out.str();
}

json analysis_betti(const Input& in, const Options& opt) {
  if (opt.quotient == "apolar") {
    const ApolarAlgebra A(in.form);
    const GradedTables t = GradedTables::from_apolar(A);
    const BettiTable b = koszul_betti(t, opt.cap);
    return {{"algebra", "apolar"}, {"table", betti_to_json(b)}, {"grid", betti_grid(b)},
            {"nvars", b.nvars}, {"j_cap", b.j_cap}, {"truncated", b.truncated},
            {"consistency", betti_consistency(t, b)},
            {"self_dual", b.truncated ? json(nullptr) : json(betti_self_dual(b, A.socle_degree()))}};
  }
  if (opt.quotient != "jacobian") throw PreconditionError("--quotient must be apolar or jacobian");
  const GradedTables t = milnor_tables(in.form, opt.order, -1);
  const BettiTable b = koszul_betti(t, opt.cap < 0 ? -1 : opt.cap);
  return {{"algebra", "jacobian"}, {"order", opt.order}, {"table", betti_to_json(b)},
          {"grid", betti_grid(b)}, {"nvars", b.nvars}, {"j_cap", b.j_cap},
          {"truncated", b.truncated}, {"consistency", betti_consistency(t, b)}};
}

json analysis_membership(const Input& in) {
  const HessianMembership m = hessian_membership(in.form);
  return {{"member", m.member}, {"zero_hessian", m.zero_hessian}, {"degree", m.degree},
          {"hessian", m.hessian.to_string()}};
}

json analysis_polar(const Input& in, int k, const Options& opt) {
  const ApolarAlgebra A(in.form);
  const PolarDegeneracy p = polar_degeneracy(A, k, opt.trials, opt.seed);
  return {{"k", p.k}, {"rank", p.rank}, {"dim_image", p.dim_image}, {"degenerate", p.degenerate},
          {"trials", p.trials}, {"seed", p.seed}};
}

json analysis_report(const Input& in, const Options& opt) {
  json out = json::object();
  const int d = form_degree(in.form);
  const bool cone = is_cone(in.form);
  out["cone"] = cone;
  const char* skipped = "skipped: input is a cone";

  out["hilbert"] = cone ? json(skipped) : analysis_hilbert(in);
  json milnor = json::object();
  for (int k = 1; k < d; ++k) milnor[std::to_string(k)] = analysis_milnor(in, k, -1);
  out["milnor"] = milnor;
  out["hessian_membership"] = analysis_membership(in);
  if (cone) {
    out["betti"] = skipped;
    out["lefschetz"] = skipped;
    out["polar"] = skipped;
    return out;
  }
  Options o = opt;
  o.quotient = "apolar";
  o.cap = -1;
  out["betti"] = analysis_betti(in, o);
  out["lefschetz"] = analysis_lefschetz(in, o);
  json polar = json::object();
  for (int k = 1; k < d; ++k) polar[std::to_string(k)] = analysis_polar(in, k, opt);
  out["polar"] = polar;
  return out;
}

json golden_value(const Input& in, const std::string& key, const Options& opt) {
  auto suffix_int = [&](std::size_t pos) { return std::stoi(key.substr(pos)); };
  if (key == "hilbert_A") return analysis_hilbert(in)["dims"];
  if (key.rfind("milnor.", 0) == 0) return milnor_summary(milnor_profile(in.form, suffix_int(7)));
  if (key == "betti") return betti_to_json(koszul_betti(GradedTables::from_apolar(ApolarAlgebra(in.form))));
  if (key == "hessian_in_jacobian") return hessian_membership(in.form).member;
  if (key == "slp") return slp_report(ApolarAlgebra(in.form), opt.trials, opt.seed).slp;
  if (key.rfind("dim_A.", 0) == 0) return ApolarAlgebra(in.form).dim(suffix_int(6));
  if (key.rfind("hess.", 0) == 0 && key.size() > 10 && key.substr(key.size() - 5) == ".zero") {
    const auto z = hess_zero(ApolarAlgebra(in.form), std::stoi(key.substr(5)), opt);
    return z ? json(*z) : json(nullptr);
  }
  if (key == "hess12.rank")
    return generic_rank(mixed_hessian(ApolarAlgebra(in.form), 1, 2), opt.trials, opt.seed).rank;
  if (key.rfind("polar.", 0) == 0)
    return polar_degeneracy(ApolarAlgebra(in.form), std::stoi(key.substr(6)), opt.trials, opt.seed)
        .degenerate;
  throw InternalError("unknown golden key '" + key + "'");
}

json verify_paper(const Input& in, const Options& opt) {
  if (!in.fixture) throw PreconditionError("--verify-paper needs --example");
  json checks = json::array();
  bool pass = true;
  for (const auto& g : in.fixture->goldens) {
    const json expected = json::parse(g.expected);
    const json actual = golden_value(in, g.key, opt);
    const bool ok = expected == actual;
    pass = pass && ok;
    checks.push_back({{"key", g.key}, {"expected", expected}, {"actual", actual}, {"pass", ok}});
  }
  return {{"checks", checks}, {"pass", pass}};
}

json experiment_hessian_membership(std::size_t nvars, int degree, int samples, std::uint64_t seed) {
  if (nvars < 2 || degree < 3 || samples < 1)
    throw PreconditionError("experiment needs nvars >= 2, degree >= 3, samples >= 1");
  Sampler sampler(seed);
  json rows = json::array();
  int members = 0;
  PointQ e0(nvars);
  e0[0] = 1;
  for (int s = 0; s < samples; ++s) {
    // Zero the coefficients of x0^d and x0^(d-1)*x_i so that (1:0:...:0) is singular.
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(nvars, degree))
      if (m[0] < static_cast<unsigned>(degree - 1)) terms.push_back({m, Rational(sampler.integer(10))});
    const Poly f = Poly::from_terms(nvars, std::move(terms));
    if (f.is_zero()) continue;
    const HessianMembership h = hessian_membership(f);
    members += h.member;
    rows.push_back({{"form", f.to_string()}, {"member", h.member}, {"zero_hessian", h.zero_hessian},
                    {"multiplicity_at_e0", multiplicity_at(f, e0)}});
  }
  return {{"nvars", nvars}, {"degree", degree}, {"samples", rows}, {"members", members},
          {"seed", seed}};
}

json make_document(const Input& in, const Options& opt, json analyses) {
  return {{"input", in.to_json()}, {"seed", opt.seed}, {"trials", opt.trials},
          {"version", version()}, {"analyses", std::move(analyses)}};
}

namespace {

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, v] : j.items()) {
    if (key == "grid" && v.is_string()) {
      out << pad << "betti table:\n";
      std::istringstream lines(v.get<std::string>());
      for (std::string line; std::getline(lines, line);) out << pad << "  " << line << '\n';
    } else if (v.is_object()) {
      out << pad << key << ":\n";
      render(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& e : v) out << pad << "  - " << e.dump() << '\n';
    } else if (v.is_string()) {
      out << pad << key << ": " << v.get<std::string>() << '\n';
    } else {
      out << pad << key << ": " << v.dump() << '\n';
    }
  }
}

}  // namespace

std::string render_text(const json& document, const json& timings) {
  std::ostringstream out;
  render(out, document, 0);
  if (!timings.empty()) {
    out << "timing:\n";
    for (const auto& [k, v] : timings.items()) out << "  " << k << ": " << v.get<double>() << " s\n";
  }
  return out.str();
}

}  // namespace apolar
