// Python bindings. Results with nested structure are returned as plain
// dicts built from the same JSON the CLI emits.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgerigid/eigensum.hpp"
#include "edgerigid/errors.hpp"
#include "edgerigid/families.hpp"
#include "edgerigid/json_io.hpp"
#include "edgerigid/rigidity.hpp"
#include "edgerigid/spectral.hpp"

namespace py = pybind11;
using namespace edgerigid;

namespace {

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ to_python(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

WeightVector weights_or_unit(const Graph& g, const std::optional<std::vector<double>>& w) {
  if (!w) return WeightVector::unit(g.size());
  if (static_cast<int>(w->size()) != g.size())
    throw DimensionMismatch("expected " + std::to_string(g.size()) + " weights");
  return WeightVector::from_values(*w, true);
}

GraphFormat parse_format(const std::string& name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  throw Error("format must be 'edge-list' or 'graph6'");
}

OptimizeOptions make_options(int iters, double tol, std::uint64_t seed, int restarts) {
  OptimizeOptions o;
  o.iters = iters;
  o.tol = tol;
  o.seed = seed;
  o.restarts = restarts;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Edge-rigidity and Laplacian eigenvalue-sum analysis of graphs";

  py::register_exception<Error>(m, "EdgeRigidError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, std::vector<std::pair<int, int>> edges) {
             return Graph::from_edges(n, std::move(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.a, e.b);
                               return out;
                             })
      .def("to_edge_list", &serialize_edge_list)
      .def("to_graph6", &serialize_graph6)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph",
        [](const std::string& text, const std::string& format) {
          return parse_graph(text, parse_format(format));
        },
        py::arg("text"), py::arg("format") = "edge-list");

  py::module_ fam = m.def_submodule("families", "Standard graph families");
  fam.def("complete", &families::complete);
  fam.def("cycle", &families::cycle);
  fam.def("path", &families::path);
  fam.def("star", &families::star, py::arg("leaves"));
  fam.def("complete_bipartite", &families::complete_bipartite);
  fam.def("petersen", &families::petersen);
  fam.def("circulant", &families::circulant);
  fam.def("random_tree", &families::random_tree, py::arg("n"), py::arg("seed"));

  m.def("laplacian",
        [](const Graph& g, std::optional<std::vector<double>> w) {
          return laplacian(g, weights_or_unit(g, w));
        },
        py::arg("graph"), py::arg("weights") = py::none());

  m.def("char_poly",
        [](const Graph& g) {
          const IntPolynomial p = char_poly(laplacian_exact(g));
          py::list out;
          for (const BigInt& c : p.coefficients()) out.append(to_python(c));
          return out;
        },
        py::arg("graph"), "Laplacian characteristic polynomial, ascending coefficients");

  m.def("is_edge_rigid",
        [](const Graph& g) { return decide_edge_rigid_exact(g).rigid; }, py::arg("graph"));

  m.def("analyze",
        [](const Graph& g, double tol, std::uint64_t seed) {
          ReportOptions o;
          o.tol = tol;
          o.seed = seed;
          return to_python(analysis_json(g, o));
        },
        py::arg("graph"), py::arg("tol") = 1e-8, py::arg("seed") = 0);

  m.def("tree_count", [](const Graph& g) { return to_python(tree_count_exact(g)); },
        py::arg("graph"));

  m.def("weighted_tree_count",
        [](const Graph& g, std::optional<std::vector<double>> w) {
          return weighted_tree_count(g, weights_or_unit(g, w));
        },
        py::arg("graph"), py::arg("weights") = py::none());

  m.def("kirchhoff_index",
        [](const Graph& g, std::optional<std::vector<double>> w) {
          return kirchhoff_index(g, weights_or_unit(g, w));
        },
        py::arg("graph"), py::arg("weights") = py::none());

  m.def("effective_resistances",
        [](const Graph& g, std::optional<std::vector<double>> w) {
          return effective_resistances(g, weights_or_unit(g, w));
        },
        py::arg("graph"), py::arg("weights") = py::none());

  m.def("kyfan",
        [](const Graph& g, int k, std::optional<std::vector<double>> w) {
          const KyFanValue v = kyfan(g, weights_or_unit(g, w), k);
          return py::make_tuple(v.top_sum, v.bottom_sum);
        },
        py::arg("graph"), py::arg("k"), py::arg("weights") = py::none(),
        "Returns (S_k, s_k)");

  m.def("optimize",
        [](const Graph& g, int k, const std::string& objective, int iters, double tol,
           std::uint64_t seed, int restarts) {
          return to_python(to_json(
              optimize(g, k, parse_objective(objective), make_options(iters, tol, seed, restarts))));
        },
        py::arg("graph"), py::arg("k"), py::arg("objective") = "upper", py::arg("iters") = 5000,
        py::arg("tol") = 1e-5, py::arg("seed") = 0, py::arg("restarts") = 0);

  m.def("profile",
        [](const Graph& g, int iters, double tol, std::uint64_t seed) {
          return to_python(to_json(k_rigidity_profile(g, make_options(iters, tol, seed, 0))));
        },
        py::arg("graph"), py::arg("iters") = 5000, py::arg("tol") = 1e-5, py::arg("seed") = 0);

  m.def("certificate",
        [](const Graph& g, int level, double tol) {
          return to_python(to_json(certificate(g, level, tol)));
        },
        py::arg("graph"), py::arg("level"), py::arg("tol") = 1e-8);

  m.def("gauge_product",
        [](const Graph& g, int k, int iters, double tol) {
          return to_python(to_json(gauge_product(g, k, make_options(iters, tol, 0, 0))));
        },
        py::arg("graph"), py::arg("k"), py::arg("iters") = 5000, py::arg("tol") = 1e-5);

  m.def("embedding",
        [](const Graph& g, int index) {
          return embedding(g, spectrum(laplacian(g)), index).coordinates;
        },
        py::arg("graph"), py::arg("index"));
}
