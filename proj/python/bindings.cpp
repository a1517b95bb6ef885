#include "sepgraph/audit.hpp"
#include "sepgraph/cli.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/graph6.hpp"
#include "sepgraph/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace sepgraph;

namespace {

Caps caps_for(int max_n) {
  Caps caps;
  caps.exponential = std::min(max_n, kMaskLimit);
  caps.toughness = std::min(max_n, kMaskLimit);
  return caps;
}

py::object optional_int(const std::optional<int>& v) {
  if (!v) return py::none();
  return py::int_(*v);
}

} // namespace

PYBIND11_MODULE(_sepgraph, m) {
  m.doc() = "separation-parameter graph toolkit (native core)";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("is_connected", &Graph::is_connected)
      .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("write_graph6", &write_graph6);
  m.def("named_graph", [](const std::string& expr) { return gen_named(expr); },
        "Family expression such as 'petersen' or 'paley(13)'.");
  m.def("random_regular", [](int n, int d, std::uint64_t seed) { return gen_random_regular(n, d, seed); });
  m.def("corpus", [](const std::string& spec, std::uint64_t seed) { return collect_corpus(CorpusSpec::parse(spec, seed)); },
        py::arg("spec"), py::arg("seed") = 0);

  m.def("laplacian_eigenvalues", [](const Graph& g) { return spectral_summary(g).laplacian_eigs; });
  m.def("normalized_laplacian_eigenvalues", [](const Graph& g) { return spectral_summary(g).normalized_eigs; });
  m.def("adjacency_eigenvalues", [](const Graph& g) { return spectral_summary(g).adjacency_eigs; });

  m.def("separation_profile", [](const Graph& g, int max_n) {
    const SeparationProfile p = separation_profile(g, caps_for(max_n));
    return py::make_tuple(p.beta_sq_weak.to_string(), p.beta_sq_strong.to_string());
  }, py::arg("g"), py::arg("max_n") = 18, "(beta_sq_weak, beta_sq_strong) as 'p/q' strings.");
  m.def("is_beta_graph", [](const Graph& g, const std::string& beta, const std::string& mode, int max_n) {
    const BetaValue b = BetaValue::exact(Rational::parse(beta));
    MembershipResult r;
    if (mode == "weak")
      r = is_weak_beta_graph(g, b, caps_for(max_n));
    else if (mode == "strong")
      r = is_strong_beta_graph(g, b, caps_for(max_n));
    else
      throw DomainError("mode must be weak or strong");
    py::object witness = py::none();
    if (r.counterexample) witness = py::make_tuple(r.counterexample->x.members(), r.counterexample->y.members());
    return py::make_tuple(r.holds, witness);
  }, py::arg("g"), py::arg("beta"), py::arg("mode"), py::arg("max_n") = 18);

  m.def("matching_number", [](const Graph& g) { return max_matching(g).alpha_prime; });
  m.def("fractional_matching_number", [](const Graph& g) { return fractional_matching_number(g).to_string(); });
  m.def("toughness", [](const Graph& g, int max_n) { return toughness(g, caps_for(max_n)).to_string(); },
        py::arg("g"), py::arg("max_n") = 20);
  m.def("scattering_number", [](const Graph& g, int max_n) { return optional_int(scattering_number(g, caps_for(max_n)).value); },
        py::arg("g"), py::arg("max_n") = 20);

  m.def("analyze_json", [](const Graph& g, int max_exact_n, int max_tough_n) {
    AuditOptions o;
    o.max_exact_n = max_exact_n;
    o.max_tough_n = max_tough_n;
    return report::analysis(GraphFacts::compute(g, o)).dump();
  }, py::arg("g"), py::arg("max_exact_n") = 18, py::arg("max_tough_n") = 20);

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run_cli(args, in, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
