#include "apolar/apolar.hpp"
#include "apolar/betti.hpp"
#include "apolar/errors.hpp"
#include "apolar/hessian.hpp"
#include "apolar/milnor.hpp"
#include "apolar/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace apolar;

namespace {

// Results cross the boundary as JSON text and are decoded on the Python side.
std::string dump(const json& j) { return j.dump(); }

Input input_of(const std::string& expr, std::size_t nvars) { return Input::from_poly(expr, nvars); }

Options options(std::uint64_t seed, int trials) {
  Options o;
  o.seed = seed;
  o.trials = trials;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "apolar core bindings";
  m.attr("__version__") = version();

  // Translators are tried newest first, so derived types go last.
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConeError>(m, "ConeError", precondition.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& expr, std::size_t nvars) { return parse_poly(expr, nvars); }),
           py::arg("expr"), py::arg("nvars"))
      .def_property_readonly("nvars", &Poly::nvars)
      .def_property_readonly("degree", &Poly::max_degree)
      .def("is_homogeneous", &Poly::is_homogeneous)
      .def("__str__", [](const Poly& p) { return p.to_string(); })
      .def("__repr__", [](const Poly& p) { return "Poly('" + p.to_string() + "')"; })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("__add__", [](Poly a, const Poly& b) { return a += b; })
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
      .def("diff", [](const Poly& p, std::size_t var) { return diff(p, var); });

  m.def("apply_op", &apply_op, py::arg("op"), py::arg("f"));
  m.def("hilbert_A", [](const Poly& f) { return hilbert_A(f).dims; }, py::arg("f"));
  m.def("is_cone", &is_cone, py::arg("f"));
  m.def("catalecticant_rank", [](const Poly& f, int k) { return rank(catalecticant(f, k)); },
        py::arg("f"), py::arg("k"));

  m.def("fixture", [](const std::string& name) { return find_fixture(name).poly(); }, py::arg("name"));
  m.def("fixture_names", &fixture_names);

  m.def("_hilbert", [](const std::string& e, std::size_t n) { return dump(analysis_hilbert(input_of(e, n))); });
  m.def("_milnor", [](const std::string& e, std::size_t n, int k, int cap) {
    return dump(analysis_milnor(input_of(e, n), k, cap));
  });
  m.def("_hessian", [](const std::string& e, std::size_t n, int k, int l, std::uint64_t seed, int trials) {
    Options o = options(seed, trials);
    o.k = k;
    o.l = l;
    return dump(analysis_hessian(input_of(e, n), o));
  });
  m.def("_lefschetz", [](const std::string& e, std::size_t n, const std::string& quotient, int order,
                         std::uint64_t seed, int trials) {
    Options o = options(seed, trials);
    o.quotient = quotient;
    o.order = order;
    return dump(analysis_lefschetz(input_of(e, n), o));
  });
  m.def("_betti", [](const std::string& e, std::size_t n) {
    return dump(analysis_betti(input_of(e, n), Options{}));
  });
  m.def("_membership", [](const std::string& e, std::size_t n) { return dump(analysis_membership(input_of(e, n))); });
  m.def("_report", [](const std::string& example, std::uint64_t seed, int trials, bool verify) {
    const Input in = Input::from_example(example);
    const Options o = options(seed, trials);
    json a = analysis_report(in, o);
    if (verify) a["verify_paper"] = verify_paper(in, o);
    return dump(make_document(in, o, a));
  });

  m.def("hess_k_is_zero", [](const Poly& f, int k) { return hess_k(ApolarAlgebra(f), k).is_zero(); },
        py::arg("f"), py::arg("k"));
  m.def("multiplicity_at", [](const Poly& f, const std::vector<long>& p) {
    PointQ q(p.begin(), p.end());
    return multiplicity_at(f, q);
  }, py::arg("f"), py::arg("point"));
}
