#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toughlab/classes.hpp"
#include "toughlab/connectivity.hpp"
#include "toughlab/enumerate.hpp"
#include "toughlab/error.hpp"
#include "toughlab/family.hpp"
#include "toughlab/graph6.hpp"
#include "toughlab/mintough.hpp"
#include "toughlab/toughness.hpp"
#include "toughlab/verify.hpp"

namespace py = pybind11;
using namespace toughlab;

namespace {

py::dict verdict_dict(const MinToughVerdict& v) {
  py::dict d;
  d["status"] = to_string(v.status);
  d["toughness"] = v.toughness.to_string();
  d["minimally_tough"] = v.minimally_tough();
  if (v.failing_edge) {
    d["failing_edge"] = py::make_tuple(v.failing_edge->u, v.failing_edge->v);
  } else {
    d["failing_edge"] = py::none();
  }
  return d;
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::string report(const std::string& target, int n_max, std::optional<int> l_max, int jobs) {
  VerifyOptions opts;
  opts.n_max = n_max;
  opts.jobs = jobs;
  if (const auto id = parse_theorem_id(target)) return report_json(verify_theorem(*id, opts));
  if (target == "table1") return report_json(verify_table1(l_max.value_or(5)));
  if (target == "wheels") return report_json(verify_wheels(l_max.value_or(9)));
  if (target == "codiam") return report_json(verify_codiam_exclusions(opts));
  if (target == "probe") return report_json(probe_conjecture_cochordal_diam2(opts));
  const std::string prefix = "kriesell:";
  if (target.rfind(prefix, 0) == 0) {
    if (const auto c = parse_scan_class(target.substr(prefix.size()))) return report_json(kriesell_scan(*c, opts));
  }
  throw ArgumentError("unknown report target '" + target + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact toughness and minimal toughness of small graphs";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            GraphBuilder b(n);
            for (const auto& [u, v] : edges) b.add_edge(u, v);
            return b.build();
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &edge_pairs)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("graph6", [](const Graph& g) { return write_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); }, py::arg("text"));
  m.def("write_graph6", &write_graph6, py::arg("graph"));
  m.def("named", [](const std::string& spec) { return make_named(spec); }, py::arg("spec"));
  m.def("complement", &complement);
  m.def("join", &join);

  m.def("toughness", [](const Graph& g) { return toughness(g).to_string(); }, py::arg("graph"));
  m.def(
      "minimal_toughness",
      [](const Graph& g, const std::string& method) {
        if (method == "definition") return verdict_dict(is_minimally_tough_by_definition(g));
        if (method == "criterion") return verdict_dict(is_minimally_tough_by_criterion(g).verdict);
        if (method != "both") throw ArgumentError("method must be definition, criterion or both");
        const MinToughVerdict a = is_minimally_tough_by_definition(g);
        const MinToughVerdict b = is_minimally_tough_by_criterion(g).verdict;
        if (a != b) throw std::logic_error("definition and criterion disagree on " + write_graph6(g));
        return verdict_dict(a);
      },
      py::arg("graph"), py::arg("method") = "both");

  m.def("local_connectivity", &local_connectivity, py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def("connectivity", &connectivity, py::arg("graph"));
  m.def(
      "classify",
      [](const Graph& g) {
        py::dict d;
        for (GraphClass c : all_graph_classes()) d[py::str(to_string(c))] = in_class(g, c);
        return d;
      },
      py::arg("graph"));

  m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"), py::arg("connected") = false);
  m.def("report_json", &report, py::arg("target"), py::arg("n_max") = kDefaultMaxOrder,
        py::arg("l_max") = py::none(), py::arg("jobs") = 1);
}
