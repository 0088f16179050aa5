#include "tempconn/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <tuple>
#include <unordered_set>

#include "tempconn/error.hpp"

namespace tempconn {

std::string_view to_string(Model m) {
  return m == Model::strict ? "strict" : "nonstrict";
}

namespace {

bool is_token(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return c <= ' ' || c == '#';
  });
}

}  // namespace

TemporalGraph::TemporalGraph(bool directed, std::size_t vertex_count,
                             std::vector<TemporalEdge> edges,
                             std::vector<std::string> names)
    : directed_(directed),
      vertex_count_(vertex_count),
      names_(std::move(names)),
      edges_(std::move(edges)) {
  if (!names_.empty()) {
    if (names_.size() != vertex_count_)
      throw InvalidArgument("name table has " + std::to_string(names_.size()) +
                            " entries for " + std::to_string(vertex_count_) +
                            " vertices");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
      if (!is_token(name)) throw InvalidArgument("invalid vertex name '" + name + "'");
      if (!seen.insert(name).second)
        throw InvalidArgument("duplicate vertex name '" + name + "'");
    }
  }

  for (auto& e : edges_) {
    if (e.tail >= vertex_count_ || e.head >= vertex_count_)
      throw InvalidArgument("edge endpoint out of range");
    if (e.tail == e.head)
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.tail));
    if (e.labels.empty()) throw InvalidArgument("edge with an empty label set");
    if (std::adjacent_find(e.labels.begin(), e.labels.end(),
                           std::greater_equal<>()) != e.labels.end())
      throw InvalidArgument("labels must be strictly ascending");
    if (!directed_ && e.tail > e.head) std::swap(e.tail, e.head);
  }
  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return a.tail == b.tail && a.head == b.head;
  });
  if (dup != edges_.end())
    throw InvalidArgument("duplicate edge " + std::to_string(dup->tail) + " " +
                          std::to_string(dup->head));

  struct TimedArc {
    Time t;
    Arc arc;
  };
  std::vector<TimedArc> timed;
  for (const auto& e : edges_) {
    temporal_edge_count_ += e.labels.size();
    lifetime_ = std::max(lifetime_, e.labels.back());
    for (Time t : e.labels) {
      timed.push_back({t, {e.tail, e.head}});
      if (!directed_) timed.push_back({t, {e.head, e.tail}});
    }
  }
  std::sort(timed.begin(), timed.end(), [](const TimedArc& a, const TimedArc& b) {
    return std::tuple(a.t, a.arc.from, a.arc.to) < std::tuple(b.t, b.arc.from, b.arc.to);
  });
  arcs_.reserve(timed.size());
  for (std::size_t i = 0; i < timed.size(); ++i) {
    if (i == 0 || timed[i].t != timed[i - 1].t) {
      times_.push_back(timed[i].t);
      slice_begin_.push_back(i);
    }
    arcs_.push_back(timed[i].arc);
  }
  slice_begin_.push_back(arcs_.size());
}

std::string TemporalGraph::vertex_label(Vertex v) const {
  return names_.empty() ? std::to_string(v) : names_.at(v);
}

std::optional<Vertex> TemporalGraph::find_vertex(std::string_view name) const {
  if (names_.empty()) {
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
    if (ec != std::errc() || ptr != name.data() + name.size() || v >= vertex_count_)
      return std::nullopt;
    return v;
  }
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

std::span<const Arc> TemporalGraph::slice_arcs(std::size_t slice) const {
  return {arcs_.data() + slice_begin_[slice], arcs_.data() + slice_begin_[slice + 1]};
}

std::span<const Arc> TemporalGraph::slice_out_arcs(std::size_t slice, Vertex v) const {
  auto all = slice_arcs(slice);
  auto lo = std::lower_bound(all.begin(), all.end(), v,
                             [](const Arc& a, Vertex x) { return a.from < x; });
  auto hi = std::upper_bound(lo, all.end(), v,
                             [](Vertex x, const Arc& a) { return x < a.from; });
  return {lo, hi};
}

const std::vector<Time>* TemporalGraph::labels_of(Vertex tail, Vertex head) const {
  if (!directed_ && tail > head) std::swap(tail, head);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(tail, head),
                             [](const TemporalEdge& e, const std::pair<Vertex, Vertex>& key) {
                               return std::pair(e.tail, e.head) < key;
                             });
  if (it == edges_.end() || it->tail != tail || it->head != head) return nullptr;
  return &it->labels;
}

TemporalGraphBuilder::TemporalGraphBuilder(bool directed, std::size_t vertex_count)
    : directed_(directed), vertex_count_(vertex_count) {}

TemporalGraphBuilder& TemporalGraphBuilder::add(Vertex u, Vertex v, Time t) {
  if (!directed_ && u > v) std::swap(u, v);
  entries_.push_back({{u, v}, t});
  return *this;
}

TemporalGraphBuilder& TemporalGraphBuilder::add(Vertex u, Vertex v,
                                                std::initializer_list<Time> ts) {
  for (Time t : ts) add(u, v, t);
  return *this;
}

TemporalGraphBuilder& TemporalGraphBuilder::set_names(std::vector<std::string> names) {
  names_ = std::move(names);
  return *this;
}

TemporalGraph TemporalGraphBuilder::build() && {
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
  std::vector<TemporalEdge> edges;
  for (const auto& [pair, t] : entries_) {
    if (edges.empty() || edges.back().tail != pair.first || edges.back().head != pair.second)
      edges.push_back({pair.first, pair.second, {}});
    edges.back().labels.push_back(t);
  }
  return TemporalGraph(directed_, vertex_count_, std::move(edges), std::move(names_));
}

Snapshot snapshot(const TemporalGraph& g, Time i) {
  if (i > g.lifetime())
    throw InvalidArgument("timestep " + std::to_string(i) + " exceeds lifetime " +
                          std::to_string(g.lifetime()));
  Snapshot s{i, g.directed(), g.vertex_count(), {}};
  for (const auto& e : g.edges())
    if (std::binary_search(e.labels.begin(), e.labels.end(), i))
      s.edges.emplace_back(e.tail, e.head);
  return s;
}

TemporalGraph underlying_undirected(const TemporalGraph& g) {
  if (!g.directed()) throw InvalidArgument("graph is already undirected");
  TemporalGraphBuilder b(false, g.vertex_count());
  for (const auto& e : g.edges())
    for (Time t : e.labels) b.add(e.tail, e.head, t);
  b.set_names(g.names());
  return std::move(b).build();
}

void validate_vertex_set(const TemporalGraph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.vertex_count())
      throw InvalidArgument("vertex " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i - 1] >= s[i])
      throw InvalidArgument("vertex set must be sorted and duplicate-free");
  }
}

TemporalGraph induced_subgraph(const TemporalGraph& g, std::span<const Vertex> keep) {
  validate_vertex_set(g, keep);
  constexpr Vertex absent = ~Vertex{0};
  std::vector<Vertex> remap(g.vertex_count(), absent);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<Vertex>(i);
  std::vector<TemporalEdge> edges;
  for (const auto& e : g.edges())
    if (remap[e.tail] != absent && remap[e.head] != absent)
      edges.push_back({remap[e.tail], remap[e.head], e.labels});
  std::vector<std::string> names;
  if (g.has_names())
    for (Vertex v : keep) names.push_back(g.names()[v]);
  return TemporalGraph(g.directed(), keep.size(), std::move(edges), std::move(names));
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace tempconn
