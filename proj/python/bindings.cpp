#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elimtree/elim_tree.hpp"
#include "elimtree/error.hpp"
#include "elimtree/flip_graph.hpp"
#include "elimtree/fpt.hpp"
#include "elimtree/graph.hpp"
#include "elimtree/io.hpp"

namespace py = pybind11;
using namespace elimtree;

namespace {

using Pair = std::pair<VertexId, VertexId>;

RotationSequence to_sequence(const std::vector<Pair>& pairs) {
  RotationSequence seq;
  seq.reserve(pairs.size());
  for (auto [p, c] : pairs) seq.push_back({p, c});
  return seq;
}

std::vector<Pair> to_pairs(const RotationSequence& seq) {
  std::vector<Pair> out;
  out.reserve(seq.size());
  for (RotationEdge e : seq) out.emplace_back(e.parent, e.child);
  return out;
}

struct Decision {
  bool yes;
  std::vector<Pair> witness;
  std::optional<std::string> early_no;
  std::vector<VertexId> marked;
  std::string explain;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Elimination trees, rotations and rotation distance";

  static py::exception<Error> error(m, "ElimTreeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(to_string(e.code())) + ": " + e.what();
      PyErr_SetString(error.ptr(), msg.c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](VertexId n, const std::vector<Pair>& edges) {
             return Graph::from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, VertexId v) {
        auto nb = g.neighbors(v);
        return std::vector<VertexId>(nb.begin(), nb.end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def(
      "generate",
      [](const std::string& family, VertexId n, VertexId clique_size, double p, std::uint64_t seed) {
        return generate(parse_family(family), n, {clique_size, p, seed});
      },
      py::arg("family"), py::arg("n"), py::arg("clique_size") = 1, py::arg("p") = 0.3,
      py::arg("seed") = 0);

  py::class_<ElimTree>(m, "ElimTree")
      .def(py::init([](std::vector<VertexId> parents) { return ElimTree::from_parents(std::move(parents)); }),
           py::arg("parents"))
      .def_property_readonly("n", &ElimTree::n)
      .def_property_readonly("root", &ElimTree::root)
      .def_property_readonly("parents", &ElimTree::parents)
      .def("parent", &ElimTree::parent)
      .def("children", [](const ElimTree& t, VertexId v) {
        auto c = t.children(v);
        return std::vector<VertexId>(c.begin(), c.end());
      })
      .def("edges", [](const ElimTree& t) { return to_pairs(t.edges()); })
      .def("__eq__", [](const ElimTree& a, const ElimTree& b) { return a == b; })
      .def("__hash__", [](const ElimTree& t) { return TreeKeyHash{}(t.parents()); })
      .def("__repr__", [](const ElimTree& t) { return "ElimTree(" + io::dump_tree(t) + ")"; });

  m.def("from_ordering", [](const Graph& g, const std::vector<VertexId>& order) {
    return from_ordering(g, order);
  });
  m.def("validate", [](const Graph& g, const ElimTree& t) {
    const Validation v = validate(g, t);
    return std::make_pair(v.ok, v.diagnostic);
  }, "Returns (ok, diagnostic).");
  m.def("rotate", [](const Graph& g, const ElimTree& t, VertexId parent, VertexId child) {
    return rotate(g, t, {parent, child});
  }, py::arg("g"), py::arg("t"), py::arg("parent"), py::arg("child"));
  m.def("apply_sequence", [](const Graph& g, const ElimTree& t, const std::vector<Pair>& seq) {
    return apply_sequence(g, t, to_sequence(seq));
  });

  m.def("bfs_distance", &bfs_distance, py::arg("g"), py::arg("source"), py::arg("target"),
        py::arg("cap") = std::nullopt);
  m.def(
      "bfs_path",
      [](const Graph& g, const ElimTree& a, const ElimTree& b, std::optional<int> cap)
          -> std::optional<std::vector<Pair>> {
        auto p = bfs_path(g, a, b, cap);
        if (!p) return std::nullopt;
        return to_pairs(*p);
      },
      py::arg("g"), py::arg("source"), py::arg("target"), py::arg("cap") = std::nullopt);
  m.def(
      "enumerate_trees",
      [](const Graph& g, VertexId max_n) {
        const FlipGraph fg = enumerate_all(g, max_n);
        std::vector<std::vector<VertexId>> out;
        for (const ElimTree& t : fg.nodes) out.push_back(t.parents());
        return std::make_pair(out, fg.adjacency);
      },
      py::arg("g"), py::arg("max_n") = kDefaultEnumerationCap,
      "Returns (parent vectors, adjacency lists) of the flip graph.");
  m.def("diameter", &diameter, py::arg("g"), py::arg("max_n") = kDefaultEnumerationCap);

  py::class_<Decision>(m, "Decision")
      .def_readonly("yes", &Decision::yes)
      .def_readonly("witness", &Decision::witness)
      .def_readonly("early_no", &Decision::early_no)
      .def_readonly("marked", &Decision::marked)
      .def_readonly("explain", &Decision::explain, "diagnostic dump as a JSON string")
      .def("__bool__", [](const Decision& d) { return d.yes; })
      .def("__repr__", [](const Decision& d) {
        return std::string("Decision(") + (d.yes ? "YES" : "NO") + ", witness=" +
               std::to_string(d.witness.size()) + " rotations)";
      });

  m.def(
      "decide",
      [](const Graph& g, const ElimTree& a, const ElimTree& b, int k, int jobs) {
        fpt::Result r;
        {
          py::gil_scoped_release release;
          r = fpt::decide(g, a, b, k, {.jobs = jobs});
        }
        Decision d{r.yes, to_pairs(r.witness), std::nullopt, r.marks.marked, io::explain_json(r).dump()};
        if (r.early_no) d.early_no = std::string(fpt::to_string(*r.early_no));
        return d;
      },
      py::arg("g"), py::arg("source"), py::arg("target"), py::arg("k"), py::arg("jobs") = 1,
      "Decides whether the rotation distance is at most k.");
}
