#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptc/extremal.hpp"
#include "ptc/generators.hpp"
#include "ptc/graph.hpp"
#include "ptc/graph_io.hpp"
#include "ptc/report.hpp"
#include "ptc/tree_packing.hpp"

namespace py = pybind11;
using namespace ptc;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

VertexSet to_set(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) {
    if (v < 0 || v >= kMaxOrder) throw InputError("terminal out of range");
    m |= bit(v);
  }
  return VertexSet(m);
}

py::dict packing_dict(const TreePacking& p) {
  py::list trees;
  for (const SteinerTree& t : p.trees) {
    py::list edges;
    for (const Edge& e : t.edges) edges.append(py::make_tuple(e.u, e.v));
    trees.append(edges);
  }
  py::dict d;
  d["mode"] = std::string(to_string(p.mode));
  d["terminals"] = p.terminals.members();
  d["trees"] = trees;
  return d;
}

py::dict global_value(const Graph& g, int k, const std::string& mode, bool fast_paths, bool bound_caps, int threads) {
  SolveOptions o;
  o.fast_paths = fast_paths;
  o.bound_caps = bound_caps;
  o.threads = threads;
  const Mode m = parse_mode(mode);
  ConnectivityResult r;
  {
    py::gil_scoped_release release;
    r = global_connectivity(g, k, m, o);
  }
  py::dict d;
  d["value"] = r.value;
  d["minimizing_terminals"] = r.minimizing_terminals.members();
  d["witness"] = packing_dict(r.witness);
  d["used_fast_path"] = r.used_fast_path;
  return d;
}

py::dict local_value(const Graph& g, const std::vector<int>& terminals, const std::string& mode) {
  const LocalResult r = local_connectivity(g, to_set(terminals), parse_mode(mode));
  py::dict d;
  d["value"] = r.value;
  d["witness"] = packing_dict(r.witness);
  return d;
}

}  // namespace

PYBIND11_MODULE(_ptc, m) {
  m.doc() = "Pendant tree packing in small graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &edge_pairs)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("to_graph6", [](const Graph& g) { return encode_graph6(g); })
      .def_static("from_graph6", [](const std::string& s) { return decode_graph6(s); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("generate", [](const std::string& spec) { return parse_generator_spec(spec).build(); }, py::arg("spec"));
  m.def("encode_graph6", &encode_graph6);
  m.def("decode_graph6", [](const std::string& s) { return decode_graph6(s); });

  m.def("min_degree", &min_degree);
  m.def("is_connected", &is_connected);
  m.def("vertex_connectivity", py::overload_cast<const Graph&>(&vertex_connectivity));

  m.def("connectivity", &global_value, py::arg("graph"), py::arg("k"), py::arg("mode") = "tau",
        py::arg("fast_paths") = true, py::arg("bound_caps") = true, py::arg("threads") = 1);
  m.def("local_connectivity", &local_value, py::arg("graph"), py::arg("terminals"), py::arg("mode") = "tau");

  m.def(
      "f_min_edges",
      [](int n, int k, int l, const std::string& strategy, std::uint64_t max_graphs, double max_seconds, int threads,
         bool allow_long_run) {
        ExtremalOptions o;
        o.strategy = parse_strategy(strategy);
        o.budget = {max_graphs, max_seconds};
        o.threads = threads;
        o.allow_long_run = allow_long_run;
        ExtremalRecord r;
        {
          py::gil_scoped_release release;
          r = f_min_edges(n, k, l, o);
        }
        return py::module_::import("json").attr("loads")(to_line(extremal_report(r)));
      },
      py::arg("n"), py::arg("k"), py::arg("l"), py::arg("strategy") = "sparse", py::arg("max_graphs") = 0,
      py::arg("max_seconds") = 0.0, py::arg("threads") = 1, py::arg("allow_long_run") = false);
  m.def("extremal_lower_bound", &extremal_lower_bound);
}
