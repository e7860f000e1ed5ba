#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbenum/enumeration.hpp"
#include "cbenum/hypergraph.hpp"
#include "cbenum/oracle.hpp"
#include "cbenum/recognition.hpp"

namespace py = pybind11;
using namespace cbenum;

namespace {

Ranking make_ranking(const Graph& g, const std::string& kind) {
  if (kind == "natural") return natural_ranking(g);
  if (kind == "degeneracy") return degeneracy_ranking(g);
  throw InputError("ranking must be 'natural' or 'degeneracy'");
}

AcyclicityMethod method_of(const std::string& name) {
  if (name == "incidence") return AcyclicityMethod::Incidence;
  if (name == "elimination") return AcyclicityMethod::Elimination;
  if (name == "brute") return AcyclicityMethod::Brute;
  throw InputError("method must be 'incidence', 'elimination' or 'brute'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chordal bipartite recognition and induced-subgraph enumeration";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        g.check_vertex(v);
        const auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def(
      "enumerate",
      [](const Graph& g, const std::string& ranking, std::optional<std::uint64_t> limit) {
        const Ranking r = make_ranking(g, ranking);
        EnumOptions opts;
        opts.limit = limit;
        std::vector<VertexSet> out;
        enumerate(g, r, [&](const StateView& s) { out.push_back(s.sorted()); }, opts);
        return out;
      },
      py::arg("graph"), py::arg("ranking") = "degeneracy", py::arg("limit") = py::none(),
      "All vertex sets inducing a chordal bipartite subgraph, empty set first.");

  m.def(
      "count",
      [](const Graph& g, const std::string& ranking) {
        py::gil_scoped_release release;
        return enumerate(g, make_ranking(g, ranking), [](const StateView&) {}).solutions;
      },
      py::arg("graph"), py::arg("ranking") = "degeneracy");

  m.def("brute_enumerate", [](const Graph& g) { return oracle::brute_enumerate(g); }, py::arg("graph"));

  m.def(
      "is_chordal_bipartite",
      [](const Graph& g) {
        const Recognition r = is_chordal_bipartite(g);
        return py::make_tuple(r.chordal_bipartite, describe(r.certificate));
      },
      py::arg("graph"), "(answer, certificate line)");

  m.def(
      "find_cbeo",
      [](const Graph& g, const std::string& ranking) -> std::optional<std::vector<Vertex>> {
        const Certificate c = find_cbeo(g, g.vertices(), make_ranking(g, ranking));
        if (const auto* f = std::get_if<CbeoFound>(&c)) return f->cbeo.order;
        return std::nullopt;
      },
      py::arg("graph"), py::arg("ranking") = "degeneracy");

  m.def(
      "degeneracy",
      [](const Graph& g) {
        const Ranking r = degeneracy_ranking(g);
        return py::make_tuple(r.degeneracy(), r.order());
      },
      py::arg("graph"), "(k, vertices in ascending rank)");

  m.def(
      "weak_simplicial_vertices",
      [](const Graph& g, const VertexSet& x) {
        const VertexSet xs = normalize_set(g, x);
        return compute_ws(g, xs, natural_ranking(g)).sorted_by_id();
      },
      py::arg("graph"), py::arg("x"));

  m.def(
      "is_beta_acyclic",
      [](const std::vector<std::vector<std::string>>& edges, const std::string& method) {
        return is_beta_acyclic(Hypergraph::from_edges(edges), method_of(method));
      },
      py::arg("edges"), py::arg("method") = "incidence");
}
