#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "tempconn/cli.hpp"
#include "tempconn/components.hpp"
#include "tempconn/error.hpp"
#include "tempconn/reachability.hpp"
#include "tempconn/text_format.hpp"

namespace py = pybind11;
using namespace tempconn;

namespace {

using VertexRef = std::variant<Vertex, std::string>;

Model parse_model(const std::string& m) {
  if (m == "nonstrict") return Model::non_strict;
  if (m == "strict") return Model::strict;
  throw InvalidArgument("model must be 'strict' or 'nonstrict', got '" + m + "'");
}

ComponentQuery parse_query(const std::string& kind, bool closed, const std::string& model) {
  ComponentQuery q;
  if (kind == "tcc") q.kind = Connectivity::mutual;
  else if (kind == "tucc") q.kind = Connectivity::unilateral;
  else throw InvalidArgument("kind must be 'tcc' or 'tucc', got '" + kind + "'");
  q.closure = closed ? Closure::closed : Closure::open;
  q.model = parse_model(model);
  return q;
}

Vertex resolve(const TemporalGraph& g, const VertexRef& ref) {
  if (const auto* name = std::get_if<std::string>(&ref)) {
    if (auto v = g.find_vertex(*name)) return *v;
    throw InvalidArgument("unknown vertex '" + *name + "'");
  }
  Vertex v = std::get<Vertex>(ref);
  if (v >= g.vertex_count()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  return v;
}

VertexSet resolve_set(const TemporalGraph& g, const std::vector<VertexRef>& refs) {
  VertexSet s;
  for (const auto& r : refs) s.push_back(resolve(g, r));
  return make_vertex_set(std::move(s));
}

std::vector<std::string> labels(const TemporalGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(g.vertex_label(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reachability and connected components in temporal graphs";

  static py::exception<Error> error(m, "TempconnError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<TemporalGraph>(m, "TemporalGraph")
      .def_static("parse", py::overload_cast<std::string_view>(&parse_temporal_graph),
                  py::arg("text"))
      .def_static("read", &read_temporal_graph_file, py::arg("path"))
      .def("serialize", py::overload_cast<const TemporalGraph&>(&serialize_temporal_graph))
      .def_property_readonly("directed", &TemporalGraph::directed)
      .def_property_readonly("vertex_count", &TemporalGraph::vertex_count)
      .def_property_readonly("lifetime", &TemporalGraph::lifetime)
      .def_property_readonly("temporal_edge_count", &TemporalGraph::temporal_edge_count)
      .def_property_readonly("names",
                             [](const TemporalGraph& g) {
                               std::vector<std::string> out;
                               for (Vertex v = 0; v < g.vertex_count(); ++v)
                                 out.push_back(g.vertex_label(v));
                               return out;
                             })
      .def("__eq__", [](const TemporalGraph& a, const TemporalGraph& b) { return a == b; })
      .def("__repr__", [](const TemporalGraph& g) {
        std::ostringstream s;
        s << "<TemporalGraph " << (g.directed() ? "directed" : "undirected") << " n="
          << g.vertex_count() << " lifetime=" << g.lifetime() << " M=" << g.temporal_edge_count()
          << ">";
        return s.str();
      });

  m.def(
      "reaches",
      [](const TemporalGraph& g, const VertexRef& u, const VertexRef& v, const std::string& model) {
        return reaches(g, resolve(g, u), resolve(g, v), parse_model(model));
      },
      py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("model") = "nonstrict");

  m.def(
      "reach_profile",
      [](const TemporalGraph& g, const VertexRef& u, const std::string& model) {
        ReachProfile p = reach_profile(g, resolve(g, u), parse_model(model));
        std::vector<std::vector<std::string>> out;
        for (const VertexSet& s : p.dense(g.lifetime())) out.push_back(labels(g, s));
        return out;
      },
      py::arg("graph"), py::arg("source"), py::arg("model") = "nonstrict",
      "Reachable vertices after each timestep 0..lifetime.");

  m.def(
      "components",
      [](const TemporalGraph& g, const std::string& kind, bool closed, const std::string& model) {
        std::vector<std::vector<std::string>> out;
        for (const VertexSet& s : enumerate_components(g, parse_query(kind, closed, model)).components)
          out.push_back(labels(g, s));
        return out;
      },
      py::arg("graph"), py::arg("kind") = "tcc", py::arg("closed") = false,
      py::arg("model") = "nonstrict");

  m.def(
      "is_connected_set",
      [](const TemporalGraph& g, const std::vector<VertexRef>& s, const std::string& kind,
         bool closed, const std::string& model) {
        return is_connected_set(g, resolve_set(g, s), parse_query(kind, closed, model));
      },
      py::arg("graph"), py::arg("vertices"), py::arg("kind") = "tcc", py::arg("closed") = false,
      py::arg("model") = "nonstrict");

  m.def(
      "is_component",
      [](const TemporalGraph& g, const std::vector<VertexRef>& s, const std::string& kind,
         bool closed, const std::string& model) {
        return is_maximal_component(g, resolve_set(g, s), parse_query(kind, closed, model));
      },
      py::arg("graph"), py::arg("vertices"), py::arg("kind") = "tcc", py::arg("closed") = false,
      py::arg("model") = "nonstrict");

  m.def(
      "find_component",
      [](const TemporalGraph& g, std::size_t k, const std::string& kind, bool closed,
         const std::string& model) -> std::optional<std::vector<std::string>> {
        auto hit = has_component_of_size(g, parse_query(kind, closed, model), k);
        if (!hit) return std::nullopt;
        return labels(g, *hit);
      },
      py::arg("graph"), py::arg("k"), py::arg("kind") = "tcc", py::arg("closed") = false,
      py::arg("model") = "nonstrict");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "",
      "Runs one command line in process; returns (exit_code, stdout, stderr).");
}
