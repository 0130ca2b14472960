#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twsep/constructor.hpp"
#include "twsep/error.hpp"
#include "twsep/io.hpp"
#include "twsep/menger.hpp"
#include "twsep/verification.hpp"
#include "twsep/wsequence.hpp"

namespace py = pybind11;
using namespace twsep;

namespace {

VertexSet to_set(const std::vector<Vertex>& members) { return VertexSet(members); }

py::dict report_dict(const ConstructReport& report) {
  py::dict d;
  d["decomposition"] = report.decomposition;
  d["width"] = report.width;
  d["a_used"] = report.a_used;
  d["certificate"] = report.certificate;
  d["bound"] = py::make_tuple(report.bound().numerator(), report.bound().denominator());
  d["oracle_calls"] = report.stats.oracle_calls;
  d["assertions_checked"] = report.assertion_log.size();
  d["assertion_violations"] = report.violations();
  d["max_interface"] = report.max_interface;
  return d;
}

OracleOptions oracle_options(const std::string& mode, std::uint64_t seed) {
  OracleOptions options;
  if (mode == "exact") options.mode = OracleMode::kExact;
  else if (mode == "heuristic") options.mode = OracleMode::kHeuristic;
  else if (mode != "auto") throw Error(ErrorCode::kInvalidInput, "unknown oracle " + mode);
  options.seed = seed;
  return options;
}

}  // namespace

PYBIND11_MODULE(_twsep, m) {
  m.doc() = "Tree decompositions of width linear in the separation number";

  static py::exception<Error> error(m, "TwsepError", PyExc_ValueError);
  static py::exception<OracleFailure> oracle_failure(m, "OracleFailure", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const OracleFailure& e) {
      const std::string message = std::string(e.what()) + " (witness " +
                                  e.witness().to_string() +
                                  (e.certified() ? ", certified)" : ", not certified)");
      PyErr_SetString(oracle_failure.ptr(), message.c_str());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) {
             return build_graph(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v >= g.num_vertices()) throw Error(ErrorCode::kVertexOutOfRange, std::to_string(v));
        auto span = g.neighbors(v);
        return std::vector<Vertex>(span.begin(), span.end());
      })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  py::class_<RootedTreeDecomposition>(m, "Decomposition")
      .def(py::init([](std::vector<std::vector<Vertex>> bags,
                       std::vector<std::pair<NodeId, NodeId>> edges, NodeId root,
                       std::size_t host_n) {
             std::vector<VertexSet> sets;
             for (auto& bag : bags) sets.emplace_back(std::move(bag));
             return root_tree(std::move(sets), edges, root, host_n);
           }),
           py::arg("bags"), py::arg("edges"), py::arg("root") = 0, py::arg("host_n"))
      .def_property_readonly("bags",
                             [](const RootedTreeDecomposition& td) {
                               std::vector<std::vector<Vertex>> out;
                               for (const VertexSet& bag : td.bags) out.push_back(bag.members());
                               return out;
                             })
      .def_property_readonly("parent",
                             [](const RootedTreeDecomposition& td) {
                               std::vector<py::object> out;
                               for (NodeId p : td.parent) {
                                 out.push_back(p == kNoParent ? py::none() : py::cast(p));
                               }
                               return out;
                             })
      .def_readonly("root", &RootedTreeDecomposition::root)
      .def_property_readonly("width", [](const RootedTreeDecomposition& td) { return width(td); })
      .def("__len__", &RootedTreeDecomposition::size);

  m.def("parse_gr", [](const std::string& text) { return parse_gr(text); });
  m.def("write_gr", &write_gr);
  m.def("parse_td", [](const std::string& text) { return parse_td(text); });
  m.def("write_td", &write_td, py::arg("td"), py::arg("graph"));
  m.def("export_dot", &export_dot);

  m.def("validate_decomposition", [](const Graph& g, const RootedTreeDecomposition& td) {
    const DecompositionCheck check = validate_decomposition(g, td);
    return py::make_tuple(check.ok, check.violations);
  });

  m.def("disjoint_paths",
        [](const Graph& g, const std::vector<Vertex>& s, const std::vector<Vertex>& t,
           std::size_t cap) {
          PathResult r = disjoint_paths(g, to_set(s), to_set(t), cap);
          py::object sep = r.separator ? py::cast(r.separator->members()) : py::none();
          return py::make_tuple(r.paths, sep);
        });

  m.def("min_balanced_separation", [](const Graph& g) {
    const Separation sep = min_balanced_separation(g);
    return py::make_tuple(sep.a_side.members(), sep.b_side.members());
  });
  m.def("separation_number", [](const Graph& g) { return separation_number(g); });
  m.def("treewidth_exact", [](const Graph& g) { return treewidth_exact(g).width; });

  m.def("build_w_sequence",
        [](const Graph& g, const std::vector<Vertex>& w, std::size_t width) {
          const WSequence ws = build_w_sequence(g, to_set(w), width);
          std::vector<std::vector<Vertex>> levels;
          for (const VertexSet& level : ws.levels) levels.push_back(level.members());
          py::dict d;
          d["levels"] = levels;
          d["ell"] = ws.ell;
          d["z"] = ws.z_set.members();
          d["valid"] = validate_w_sequence(g, ws).ok;
          return d;
        });

  m.def(
      "construct",
      [](const Graph& g, std::size_t a, const std::vector<Vertex>& w, const std::string& oracle,
         bool debug_assertions, std::uint64_t seed) {
        ConstructOptions options;
        options.debug_assertions = debug_assertions;
        return report_dict(
            construct(g, a, to_set(w), make_oracle(oracle_options(oracle, seed)), options));
      },
      py::arg("graph"), py::arg("a"), py::arg("w") = std::vector<Vertex>{0},
      py::arg("oracle") = "auto", py::arg("debug_assertions") = false, py::arg("seed") = 0x5eed);

  m.def(
      "find_min_feasible_a",
      [](const Graph& g, const std::vector<Vertex>& w) {
        FeasibleA found = find_min_feasible_a(g, to_set(w));
        py::dict d = report_dict(found.report);
        d["certified"] = found.certified;
        return d;
      },
      py::arg("graph"), py::arg("w") = std::vector<Vertex>{0});

  m.def("construct_theorem2",
        [](const Graph& g, std::size_t a) { return report_dict(construct_theorem2(g, a)); });

  m.def("run_suite_json", [](const std::string& config) {
    return to_json(run_suite(parse_suite_config(nlohmann::json::parse(config)))).dump();
  });
}
