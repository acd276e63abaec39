// Thin bindings. Reports cross the boundary as JSON text and are decoded by
// the Python package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "oddplanar/bounds.hpp"
#include "oddplanar/document.hpp"
#include "oddplanar/enumerate.hpp"
#include "oddplanar/lemma1.hpp"
#include "oddplanar/pipeline.hpp"
#include "oddplanar/random_drawing.hpp"
#include "oddplanar/report.hpp"
#include "oddplanar/search.hpp"
#include "oddplanar/svg.hpp"
#include "oddplanar/validate.hpp"

namespace py = pybind11;
using namespace oddplanar;

namespace {

Variant variant_of(const std::string& s) {
  if (s == "cr") return Variant::Cr;
  if (s == "pcr") return Variant::Pcr;
  if (s == "ocr") return Variant::Ocr;
  throw Error(ErrorKind::InvalidArgument, "unknown variant " + s);
}

Rule rule_of(const std::string& s) {
  if (s == "+" || s == "plus") return Rule::Plus;
  if (s == "0" || s == "zero") return Rule::Zero;
  if (s == "-" || s == "minus") return Rule::Minus;
  if (s == "*" || s == "star") return Rule::Star;
  throw Error(ErrorKind::InvalidArgument, "unknown rule " + s);
}

RandomModel model_of(const std::string& s) {
  if (s == "convex") return RandomModel::Convex;
  if (s == "perturbed-even") return RandomModel::PerturbedEven;
  throw Error(ErrorKind::InvalidArgument, "unknown model " + s);
}

}  // namespace

PYBIND11_MODULE(_oddplanar, m) {
  m.doc() = "Native core of oddplanar";
  // Raised with args (message, kind name).
  static PyObject* error_type = py::exception<Error>(m, "OddplanarError").release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error_type, py::make_tuple(e.what(), to_string(e.kind())).ptr());
    }
  });

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init([](std::vector<VertexId> vertices, const std::vector<std::tuple<EdgeId, VertexId, VertexId>>& edges) {
             std::vector<Edge> es;
             for (auto [id, u, v] : edges) es.push_back({id, u, v});
             return Multigraph(std::move(vertices), std::move(es));
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_static("complete", &Multigraph::complete)
      .def_static("complete_bipartite", &Multigraph::complete_bipartite)
      .def_property_readonly("vertices", [](const Multigraph& g) {
        return std::vector<VertexId>(g.vertices().begin(), g.vertices().end());
      })
      .def_property_readonly("edges", [](const Multigraph& g) {
        std::vector<std::tuple<EdgeId, VertexId, VertexId>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.id, e.u, e.v);
        return out;
      })
      .def("is_simple", &Multigraph::is_simple)
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; });

  py::class_<Drawing>(m, "Drawing")
      .def_property_readonly("graph", &Drawing::graph)
      .def_property_readonly("crossing_count", &Drawing::crossing_node_count)
      .def("serialize", [](const Drawing& d) { return serialize_drawing(d); })
      .def("__eq__", [](const Drawing& a, const Drawing& b) { return a == b; });

  m.def("parse_drawing", [](const std::string& text) { return parse_drawing(text); });
  m.def("serialize_drawing", [](const Drawing& d) { return serialize_drawing(d); });
  m.def("validate_json", [](const Drawing& d) { return to_json(validate_drawing(d)).dump(); });
  m.def("stats_json", [](const Drawing& d) { return to_json(crossing_stats(d)).dump(); });
  m.def("lemma1_redraw", [](const std::vector<EdgeId>& word) {
    std::vector<Ending> rotation;
    std::map<EdgeId, int> seen;
    for (EdgeId e : word) rotation.push_back({e, static_cast<std::uint8_t>(seen[e]++ == 0 ? 0 : 1)});
    const auto sketch = OneVertexSketch::from_rotation(0, rotation);
    sketch.check();
    return lemma1_redraw(sketch);
  });
  m.def("transform", [](const Drawing& d, int k) {
    const PipelineTrace t = theorem2_transform(d, k);
    return std::make_pair(t.result, to_json(t).dump());
  });
  m.def("embed", &hanani_tutte_embed);
  m.def("mk_upper", [](int k, std::int64_t n) {
    const MkBound b = mk_upper_bound(k, n);
    return std::make_pair(b.value, b.exact);
  });
  m.def("modd_upper", &modd_upper);
  m.def("bounds_json", [](int k, std::int64_t n, std::int64_t edges) { return to_json(bound_report(k, n, edges)).dump(); });
  m.def("audit_json", [](const Drawing& d, int k) { return to_json(audit_drawing(d, k)).dump(); });
  m.def("sample_json", [](const Drawing& d, double p, std::int64_t trials, std::uint64_t seed, int threads) {
    py::gil_scoped_release release;
    return to_json(sampling_experiment(d, p, trials, seed, threads)).dump();
  });
  m.def("oracle", [](const Multigraph& g, const std::string& variant, const std::string& rule, int max_crossings,
                     std::int64_t max_candidates, double time_limit, int threads) {
    const EnumerationBudget b{max_crossings, max_candidates, time_limit};
    const Variant v = variant_of(variant);
    const Rule r = rule_of(rule);
    py::gil_scoped_release release;
    const CrossingValue cv = exact_crossing_value(g, v, r, b, threads);
    return std::make_tuple(cv.exact, cv.value, cv.witness, cv.candidates);
  });
  m.def("search_json", [](int k, int n, std::int64_t iterations, std::uint64_t seed, double time_limit) {
    py::gil_scoped_release release;
    return to_json(extremal_search(k, n, {iterations, time_limit}, seed)).dump();
  });
  m.def("random_graph", &random_graph);
  m.def("random_planar_graph", &random_planar_graph);
  m.def("random_drawing", [](const Multigraph& g, std::uint64_t seed, const std::string& model, int moves) {
    return random_drawing(g, seed, model_of(model), moves);
  });
  m.def("render_svg", [](const Drawing& d) { return render_svg(d); });
}
