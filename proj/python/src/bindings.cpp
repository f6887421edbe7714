// Python module _recolor. Graphs, colorings, decompositions and CSGs cross
// the boundary as native objects; to_json/from_json use the CLI's JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recolor/chordal.hpp"
#include "recolor/connectivity.hpp"
#include "recolor/csg.hpp"
#include "recolor/essential.hpp"
#include "recolor/generators.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/tree_decomposition.hpp"

namespace py = pybind11;
using namespace recolor;

namespace {

py::dict fast_result_dict(const FastResult& r) {
  py::dict d;
  d["answer"] = r.answer;
  d["state"] = std::string(state_name(r.root_state));
  d["root_terminals"] = r.root_terminals;
  d["max_weight"] = r.max_weight;
  d["max_path_length"] = r.max_path_length;
  d["td_node_count"] = r.td_node_count;
  d["early_stop"] = r.early_stop;
  d["oracle_bypass"] = r.oracle_bypass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_recolor, m) {
  m.doc() = "Recoloring reachability on chordal graphs";

  auto& input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  // registered last so it is tried before the InputError translator
  static py::handle precondition = py::exception<PreconditionError>(m, "PreconditionError", input_error.ptr()).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      py::object err = precondition(e.what());
      err.attr("predicate") = e.predicate();
      PyErr_SetObject(precondition.ptr(), err.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("to_json", [](const Graph& g) { return io::dump(io::graph_to_json(g)); })
      .def_static("from_json", [](const std::string& s) { return io::graph_from_json(io::json::parse(s)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<Coloring>(m, "Coloring")
      .def(py::init<int, std::vector<Color>>(), py::arg("k"), py::arg("colors"))
      .def_property_readonly("k", &Coloring::k)
      .def_property_readonly("colors", [](const Coloring& c) {
        auto s = c.colors();
        return std::vector<Color>(s.begin(), s.end());
      })
      .def("to_json", [](const Coloring& c) { return io::dump(io::coloring_to_json(c)); })
      .def_static("from_json", [](const std::string& s) { return io::coloring_from_json(io::json::parse(s)); })
      .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; })
      .def("__repr__", [](const Coloring& c) { return "Coloring(" + io::dump(io::coloring_to_json(c)) + ")"; });

  py::class_<NiceTreeDecomposition>(m, "NiceTreeDecomposition")
      .def_property_readonly("size", &NiceTreeDecomposition::size)
      .def_property_readonly("root", [](const NiceTreeDecomposition& td) { return td.root; })
      .def_property_readonly("width", [](const NiceTreeDecomposition& td) { return td_width(td); })
      .def("bag", [](const NiceTreeDecomposition& td, int i) { return td.nodes.at(static_cast<std::size_t>(i)).bag; })
      .def("kind", [](const NiceTreeDecomposition& td, int i) {
        return std::string(to_string(td.nodes.at(static_cast<std::size_t>(i)).kind));
      })
      .def("children",
           [](const NiceTreeDecomposition& td, int i) { return td.nodes.at(static_cast<std::size_t>(i)).children; })
      .def("to_json", [](const NiceTreeDecomposition& td) { return io::dump(io::td_to_json(td)); })
      .def("to_dot", &io::td_to_dot);

  py::class_<Csg>(m, "Csg")
      .def_property_readonly("k", &Csg::k)
      .def_property_readonly("terminals", [](const Csg& h) {
        auto t = h.terminals();
        return std::vector<Vertex>(t.begin(), t.end());
      })
      .def_property_readonly("node_count", &Csg::node_count)
      .def_property_readonly("edge_count", &Csg::edge_count)
      .def_readonly("marks", &Csg::marks)
      .def("label", [](const Csg& h, NodeId x) {
        auto l = h.label(x);
        return std::vector<Color>(l.begin(), l.end());
      })
      .def("neighbors", [](const Csg& h, NodeId x) {
        auto nb = h.neighbors(x);
        return std::vector<NodeId>(nb.begin(), nb.end());
      })
      .def("components", &Csg::components)
      .def("reachable", &csg_reachable)
      .def("to_json", [](const Csg& h) { return io::dump(io::csg_to_json(h)); })
      .def_static("from_json", [](const std::string& s) { return io::csg_from_json(io::json::parse(s)); })
      .def("to_dot", [](const Csg& h) { return io::csg_to_dot(h); });

  m.def("is_chordal", &is_chordal);
  m.def("is_l_connected", &is_l_connected, py::arg("g"), py::arg("l"));
  m.def("is_proper_coloring", &is_proper_coloring);
  m.def("max_clique", &max_clique_chordal);
  m.def("greedy_coloring", &greedy_chordal_coloring, py::arg("g"), py::arg("k"));

  m.def(
      "decompose",
      [](const Graph& g, std::optional<std::vector<Vertex>> root) {
        if (is_chordal(g)) return root ? build_chordal_nice_td(g, *root) : build_chordal_nice_td(g);
        return root ? build_nice_td(g, *root) : build_nice_td(g);
      },
      py::arg("g"), py::arg("root") = py::none());

  m.def(
      "reach",
      [](const Graph& g, int k, const Coloring& alpha, const Coloring& beta, const std::string& mode,
         std::optional<std::vector<Vertex>> root, std::optional<std::size_t> budget) -> py::dict {
        if (mode == "fast") {
          FastOptions opts;
          opts.root_clique = std::move(root);
          return fast_result_dict(fast_reachability(g, k, alpha, beta, opts));
        }
        py::dict d;
        if (mode == "generic") {
          auto td = root ? build_nice_td(g, *root) : build_nice_td(g);
          DpOptions opts;
          if (budget) opts.budget.max_nodes = *budget;
          auto csg = csg_over_decomposition(g, td, k, alpha, beta, opts);
          d["answer"] = csg_reachable(csg);
          d["root_nodes"] = csg.node_count();
        } else if (mode == "oracle") {
          OracleBudget ob;
          if (budget) ob.max_colorings = *budget;
          d["answer"] = oracle_reachable(g, k, alpha, beta, ob);
        } else {
          throw InputError("mode must be fast, generic or oracle");
        }
        return d;
      },
      py::arg("g"), py::arg("k"), py::arg("alpha"), py::arg("beta"), py::arg("mode") = "fast",
      py::arg("root") = py::none(), py::arg("budget") = py::none());

  m.def(
      "csg",
      [](const Graph& g, int k, std::vector<Vertex> terminals, const std::string& engine,
         std::vector<Coloring> tracked) {
        if (engine == "oracle") return contract_solution_graph(enumerate_solution_graph(g, k), terminals);
        if (engine != "dp") throw InputError("engine must be dp or oracle");
        auto td = build_nice_td(g, terminals);
        return run_csg_dp(g, td, k, tracked).root;
      },
      py::arg("g"), py::arg("k"), py::arg("terminals"), py::arg("engine") = "dp",
      py::arg("tracked") = std::vector<Coloring>{});

  m.def("csg_over_decomposition",
        [](const Graph& g, const NiceTreeDecomposition& td, int k, const Coloring& a, const Coloring& b) {
          return csg_over_decomposition(g, td, k, a, b);
        });
  m.def("labeled_isomorphic", [](const Csg& a, const Csg& b) { return labeled_isomorphic(a, b); });

  m.def("gen_interval_family", &gen_interval_family, py::arg("p"));
  m.def("gen_interval_coloring", [](int p, std::vector<int> s) { return gen_interval_coloring(p, s); },
        py::arg("p"), py::arg("subset") = std::vector<int>{});
  m.def("gen_quadratic_family", &gen_quadratic_family, py::arg("n"));
  m.def("gen_random_connected_chordal", &gen_random_connected_chordal, py::arg("n"), py::arg("k"), py::arg("conn"),
        py::arg("seed"));
  m.def("gen_random_chordal_mixed", &gen_random_chordal_mixed, py::arg("n"), py::arg("k"), py::arg("seed"),
        py::arg("small_attach") = 0.5);
  m.def("gen_star_blowup", &gen_star_blowup, py::arg("gadget"), py::arg("hub"), py::arg("p"));
  m.def("random_coloring", &random_chordal_coloring, py::arg("g"), py::arg("k"), py::arg("seed"));
  m.def("random_walk", &random_recoloring_walk, py::arg("g"), py::arg("start"), py::arg("steps"), py::arg("seed"));
}
