#pragma once

#include <string>

#include "tempconn/temporal_graph.hpp"
#include "tempconn/text_format.hpp"

namespace tempconn::test {

inline std::string data_path(const std::string& file) {
  return std::string(TEMPCONN_TEST_DATA) + "/" + file;
}

inline const TemporalGraph& fig1() {
  static const TemporalGraph g = read_temporal_graph_file(data_path("fig1.tg"));
  return g;
}

inline Vertex v(const TemporalGraph& g, const char* name) { return *g.find_vertex(name); }

inline VertexSet set_of(const TemporalGraph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* n : names) s.push_back(v(g, n));
  return make_vertex_set(std::move(s));
}

}  // namespace tempconn::test
