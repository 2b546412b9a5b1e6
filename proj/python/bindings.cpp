#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lexshell/suites.hpp"

namespace py = pybind11;
using namespace lexshell;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.a, e.b);
  return out;
}

std::vector<std::vector<int>> facet_lists(const Complex& d) {
  std::vector<std::vector<int>> out;
  for (VertexSet f : d.facets()) out.push_back(f.elements());
  return out;
}

Complex complex_from_lists(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> sets;
  for (const auto& f : facets) sets.push_back(VertexSet::from_vector(f));
  return Complex::from_faces(n, std::move(sets));
}

CheckOptions options(std::optional<double> timeout, int threads, bool cyclic_symmetry) {
  CheckOptions o;
  if (timeout) o.timeout = std::chrono::duration<double>(*timeout);
  o.threads = threads;
  o.cyclic_symmetry = cyclic_symmetry;
  return o;
}

RunConfig run_config(std::optional<double> timeout, int threads, std::uint64_t seed, bool deep) {
  RunConfig cfg;
  cfg.timeout_seconds = timeout;
  cfg.threads = threads;
  cfg.seed = seed;
  cfg.deep = deep;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compiled core of lexshell";

  py::register_exception<NotPureError>(m, "NotPureError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_TimeoutError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> e;
             for (auto [a, b] : edges) e.push_back({a, b});
             return Graph(n, std::move(e));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edges", &edge_pairs)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(" + describe(g) + ")"; });

  py::class_<Complex>(m, "Complex")
      .def(py::init(&complex_from_lists), py::arg("n"), py::arg("facets"))
      .def_property_readonly("n", &Complex::vertex_count)
      .def_property_readonly("facets", &facet_lists)
      .def("is_void", &Complex::is_void)
      .def("dimension", &Complex::dimension)
      .def("__eq__", [](const Complex& a, const Complex& b) { return a == b; })
      .def("__repr__", [](const Complex& d) { return "Complex(" + complex_to_json(d).dump() + ")"; });

  m.def("circulant", [](int n, const std::vector<int>& gens) { return circulant(CirculantSpec(n, gens)); });
  m.def("complete", &complete);
  m.def("edgeless", &Graph::edgeless);
  m.def("lex_product", &lex_product);
  m.def("expansion", [](const Graph& g, const std::vector<int>& s) { return expansion(g, ExpansionVector(s)); });
  m.def("circulant_lex_connection", [](int n, const std::vector<int>& s1, int k, const std::vector<int>& s2) {
    const CirculantSpec c = circulant_lex_connection(CirculantSpec(n, s1), CirculantSpec(k, s2));
    return std::make_pair(c.modulus(), c.generators());
  });
  m.def("parse_graph", [](const std::string& d) { return parse_graph(d); });
  m.def("describe", &describe);
  m.def("to_dot", [](const Graph& g) { return to_dot(g); });

  m.def("independence_complex", &independence_complex);
  m.def("alpha", &alpha);
  m.def("is_pure", &is_pure);
  m.def("link", [](const Complex& d, const std::vector<int>& face) { return link(d, VertexSet::from_vector(face)); });
  m.def("deletion", &deletion);

  // Checker results cross the boundary as JSON text; the package decodes them.
  m.def(
      "_shelling",
      [](const Complex& d, std::optional<double> timeout, int threads) {
        CheckOutcome<ShellingCertificate> out;
        {
          py::gil_scoped_release release;
          out = shelling(d, options(timeout, threads, false));
        }
        json j = {{"verdict", to_string(out.verdict)}, {"stats", stats_to_json(out.stats)}};
        if (out.certificate) j["certificate"] = certificate_to_json(*out.certificate);
        return j.dump();
      },
      py::arg("complex"), py::arg("timeout") = py::none(), py::arg("threads") = 1);
  m.def(
      "_vertex_decomposition",
      [](const Complex& d, std::optional<double> timeout, int threads, bool cyclic_symmetry) {
        CheckOutcome<ShedTree> out;
        {
          py::gil_scoped_release release;
          out = vertex_decomposition(d, options(timeout, threads, cyclic_symmetry));
        }
        json j = {{"verdict", to_string(out.verdict)}, {"stats", stats_to_json(out.stats)}};
        if (out.certificate) j["certificate"] = certificate_to_json(*out.certificate);
        return j.dump();
      },
      py::arg("complex"), py::arg("timeout") = py::none(), py::arg("threads") = 1,
      py::arg("cyclic_symmetry") = false);
  m.def("_verify_shelling", [](const Complex& d, const std::string& cert) {
    return verify_shelling(d, shelling_certificate_from_json(json::parse(cert)));
  });
  m.def("_verify_shed_tree", [](const Complex& d, const std::string& cert) {
    return verify_shed_tree(d, shed_tree_from_json(json::parse(cert)));
  });
  m.def("_reduced_homology", [](const Complex& d) { return profile_to_json(reduced_homology(d)).dump(); });
  m.def(
      "is_cohen_macaulay",
      [](const Complex& d, std::optional<double> timeout) {
        HomologyOptions o;
        if (timeout) o.timeout = std::chrono::duration<double>(*timeout);
        py::gil_scoped_release release;
        return is_cohen_macaulay(d, o);
      },
      py::arg("complex"), py::arg("timeout") = py::none());

  m.def(
      "_run_check",
      [](const std::string& kind, const std::string& descriptor, std::optional<double> timeout, int threads) {
        const Input input = parse_input(descriptor);
        py::gil_scoped_release release;
        return run_check(parse_check_kind(kind), input, descriptor, run_config(timeout, threads, 0, false))
            .to_json()
            .dump();
      },
      py::arg("kind"), py::arg("descriptor"), py::arg("timeout") = py::none(), py::arg("threads") = 1);
  m.def(
      "_run_suite",
      [](const std::string& name, std::uint64_t seed, bool deep, int threads) {
        py::gil_scoped_release release;
        return run_suite(name, run_config(std::nullopt, threads, seed, deep)).to_json().dump();
      },
      py::arg("name"), py::arg("seed") = RunConfig{}.seed, py::arg("deep") = false, py::arg("threads") = 1);
  m.def("suite_names", &suite_names);
}
