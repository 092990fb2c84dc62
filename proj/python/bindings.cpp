#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parklot/counting.hpp"
#include "parklot/error.hpp"
#include "parklot/flip.hpp"
#include "parklot/formulas.hpp"
#include "parklot/graph_io.hpp"
#include "parklot/parking.hpp"
#include "parklot/verify.hpp"

namespace py = pybind11;
using namespace parklot;

namespace {

// Counts can exceed 64 bits; hand them to Python through their decimal text.
py::int_ to_py(const Count& c) { return py::int_(py::str(c.get_str())); }

CountOptions options(std::uint64_t budget, unsigned threads) { return {budget, threads}; }

py::dict check_to_py(const InequalityCheck& c) {
  py::dict d;
  d["lhs"] = to_py(c.lhs);
  d["rhs"] = to_py(c.rhs);
  d["holds"] = c.holds;
  d["in_hypothesis"] = c.in_hypothesis;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parking functions on directed graphs";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<GraphError>(m, "GraphError", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

  py::class_<DiGraph>(m, "DiGraph")
      .def(py::init([](int n, const std::vector<Edge>& edges, std::optional<Vertex> root, const std::string& orient) {
             return DiGraph(n, edges, root, parse_orientation(orient));
           }),
           py::arg("n"), py::arg("edges"), py::arg("root") = py::none(), py::arg("orient") = "general")
      .def_property_readonly("n", &DiGraph::size)
      .def_property_readonly("root", &DiGraph::root)
      .def_property_readonly("orient", [](const DiGraph& d) { return to_string(d.orientation()); })
      .def("edges", &DiGraph::edges)
      .def("out", &DiGraph::out, py::arg("v"))
      .def("reversed", [](const DiGraph& d) { return reverse(d); })
      .def("hash", [](const DiGraph& d) { return graph_hash(d); })
      .def("__len__", &DiGraph::size)
      .def("__eq__", [](const DiGraph& a, const DiGraph& b) { return a == b; })
      .def("__str__", [](const DiGraph& d) { return format_graph(d); })
      .def("__repr__", [](const DiGraph& d) {
        return "<DiGraph n=" + std::to_string(d.size()) + " orient=" + to_string(d.orientation()) + ">";
      });

  m.def("parse_graph", py::overload_cast<const std::string&>(&parse_graph), py::arg("text"));
  m.def("load_graph", [](const std::string& path) { return load_graph(path); }, py::arg("path"));

  m.def("star", [](int n, const std::string& o) { return build_star(n, parse_orientation(o)); }, py::arg("n"),
        py::arg("orient"));
  m.def("path", [](int n, const std::string& o) { return build_path(n, parse_orientation(o)); }, py::arg("n"),
        py::arg("orient"));
  m.def("spider", [](const std::vector<int>& legs, const std::string& o) { return build_spider(legs, parse_orientation(o)); },
        py::arg("legs"), py::arg("orient"));
  m.def("tree",
        [](int n, const std::vector<Edge>& edges, Vertex root, const std::string& o) {
          return build_tree(n, edges, root, parse_orientation(o));
        },
        py::arg("n"), py::arg("edges"), py::arg("root"), py::arg("orient"));
  m.def("minleafdist", [](const DiGraph& t) -> std::optional<int> {
    const int d = minleafdist(t);
    return d == kUnbounded ? std::nullopt : std::optional<int>(d);
  });

  m.def("is_parking_function", [](const DiGraph& d, const PrefSeq& s) {
    validate_prefs(d, s);
    return is_parking_function(d, s);
  });
  m.def("witness", [](const DiGraph& d, const PrefSeq& s) -> std::optional<std::vector<Vertex>> {
    validate_prefs(d, s);
    auto w = find_witness(d, s);
    if (!w) return std::nullopt;
    return w->parked_at;
  });
  m.def("feasible_spots", &feasible_spots, py::arg("graph"), py::arg("occupied"), py::arg("start"));
  m.def("flip", [](const DiGraph& t, const PrefSeq& s) { return flip_star(t, s); }, py::arg("tree"), py::arg("seq"));
  m.def("flip_vertex", &flip_star_vertex, py::arg("tree"), py::arg("v"));

  m.def("count",
        [](const DiGraph& d, int m, std::uint64_t budget, unsigned threads) {
          Count c;
          {
            py::gil_scoped_release release;
            c = count_pf(d, m, options(budget, threads));
          }
          return to_py(c);
        },
        py::arg("graph"), py::arg("m"), py::arg("budget") = CountOptions{}.budget, py::arg("threads") = 0);
  m.def("count_by_root_preference",
        [](const DiGraph& d, int m, std::uint64_t budget) {
          py::dict out;
          for (const auto& [k, c] : count_by_root_preference(d, m, options(budget, 0))) out[py::int_(k)] = to_py(c);
          return out;
        },
        py::arg("graph"), py::arg("m"), py::arg("budget") = CountOptions{}.budget);
  m.def("count_completions",
        [](const DiGraph& d, int m, const PrefixAssignment& g, std::uint64_t budget) {
          return to_py(count_completions(d, m, g, options(budget, 0)));
        },
        py::arg("graph"), py::arg("m"), py::arg("prefix"), py::arg("budget") = CountOptions{}.budget);

  m.def("formula",
        [](const std::string& name, const std::vector<long>& args) {
          const FormulaValue v = evaluate_formula(name, args);
          py::dict out;
          out["provenance"] = v.provenance;
          py::dict values;
          for (const auto& [k, c] : v.values) values[py::str(k)] = to_py(c);
          out["values"] = values;
          out["check"] = v.check ? py::object(check_to_py(*v.check)) : py::none();
          return out;
        },
        py::arg("name"), py::arg("args"));
  m.def("formula_names", &formula_names);

  // Returned as JSON text; the Python wrapper decodes it.
  m.def("run_suite_json",
        [](const std::string& name, int max_n, int max_m, std::uint64_t seed, bool timing) {
          std::string text;
          {
            py::gil_scoped_release release;
            text = to_json(run_suite(name, {max_n, max_m, seed}), timing).dump();
          }
          return text;
        },
        py::arg("name"), py::arg("max_n") = 0, py::arg("max_m") = 0, py::arg("seed") = 1, py::arg("timing") = true);
  m.def("suite_names", &suite_names);
}
