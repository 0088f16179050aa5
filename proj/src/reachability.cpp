#include "tempconn/reachability.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "tempconn/error.hpp"

namespace tempconn {

std::string_view to_string(WalkDefect d) {
  switch (d) {
    case WalkDefect::none: return "ok";
    case WalkDefect::empty: return "empty walk";
    case WalkDefect::length_mismatch: return "need exactly one timestep per step";
    case WalkDefect::vertex_out_of_range: return "vertex out of range";
    case WalkDefect::missing_edge: return "no such edge";
    case WalkDefect::label_unavailable: return "edge not available at that timestep";
    case WalkDefect::time_order: return "timesteps out of order";
  }
  return "unknown";
}

WalkCheck check_temporal_walk(const TemporalGraph& g, const TemporalWalk& w, Model m) {
  if (w.vertices.empty()) return {WalkDefect::empty, 0};
  if (w.times.size() + 1 != w.vertices.size()) return {WalkDefect::length_mismatch, 0};
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    if (w.vertices[i] >= g.vertex_count()) return {WalkDefect::vertex_out_of_range, i};
  for (std::size_t i = 0; i < w.times.size(); ++i) {
    const auto* labels = g.labels_of(w.vertices[i], w.vertices[i + 1]);
    if (labels == nullptr) return {WalkDefect::missing_edge, i};
    if (!std::binary_search(labels->begin(), labels->end(), w.times[i]))
      return {WalkDefect::label_unavailable, i};
    if (i > 0) {
      bool ordered = m == Model::strict ? w.times[i - 1] < w.times[i] : w.times[i - 1] <= w.times[i];
      if (!ordered) return {WalkDefect::time_order, i};
    }
  }
  return {};
}

bool is_temporal_walk(const TemporalGraph& g, const TemporalWalk& w, Model m) {
  return static_cast<bool>(check_temporal_walk(g, w, m));
}

ReachProfile::ReachProfile(Vertex source, Model model, VertexSet initial)
    : source_(source), model_(model), initial_(std::move(initial)) {}

const VertexSet& ReachProfile::at(Time i) const {
  auto it = std::upper_bound(times_.begin(), times_.end(), i);
  if (it == times_.begin()) return initial_;
  return sets_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

const VertexSet& ReachProfile::final_set() const {
  return sets_.empty() ? initial_ : sets_.back();
}

std::vector<VertexSet> ReachProfile::dense(Time lifetime) const {
  std::vector<VertexSet> out;
  out.reserve(lifetime + 1);
  for (Time i = 0; i <= lifetime; ++i) out.push_back(at(i));
  return out;
}

void ReachProfile::record(Time t, VertexSet s) {
  times_.push_back(t);
  sets_.push_back(std::move(s));
}

ReachSweeper::ReachSweeper(const TemporalGraph& g, Model m)
    : g_(g), model_(m), reach_slice_(g.vertex_count(), unreached) {}

template <typename OnSlice>
void ReachSweeper::sweep(Vertex source, const std::vector<char>* allowed, OnSlice&& on_slice) {
  for (Vertex v : touched_) reach_slice_[v] = unreached;
  touched_.clear();
  reach_slice_[source] = 0;
  touched_.push_back(source);
  auto permitted = [allowed](Vertex v) { return allowed == nullptr || (*allowed)[v]; };

  for (std::size_t s = 0; s < g_.slice_count(); ++s) {
    const auto stamp = static_cast<std::uint32_t>(s + 1);
    const std::size_t before = touched_.size();
    auto arcs = g_.slice_arcs(s);
    if (model_ == Model::strict) {
      // Only vertices reached at an earlier timestep may depart now.
      for (const Arc& a : arcs) {
        if (reach_slice_[a.from] < stamp && reach_slice_[a.to] == unreached && permitted(a.to)) {
          reach_slice_[a.to] = stamp;
          touched_.push_back(a.to);
        }
      }
    } else {
      stack_.clear();
      for (const Arc& a : arcs) {
        if (reach_slice_[a.from] != unreached && reach_slice_[a.to] == unreached &&
            permitted(a.to)) {
          reach_slice_[a.to] = stamp;
          touched_.push_back(a.to);
          stack_.push_back(a.to);
        }
      }
      while (!stack_.empty()) {
        Vertex x = stack_.back();
        stack_.pop_back();
        for (const Arc& a : g_.slice_out_arcs(s, x)) {
          if (reach_slice_[a.to] == unreached && permitted(a.to)) {
            reach_slice_[a.to] = stamp;
            touched_.push_back(a.to);
            stack_.push_back(a.to);
          }
        }
      }
    }
    if (touched_.size() != before) on_slice(s);
    if (touched_.size() == g_.vertex_count()) break;
  }
}

void ReachSweeper::run(Vertex source) {
  sweep(source, nullptr, [](std::size_t) {});
}

void ReachSweeper::run(Vertex source, const std::vector<char>& allowed) {
  sweep(source, &allowed, [](std::size_t) {});
}

ReachProfile ReachSweeper::profile(Vertex source) {
  ReachProfile p(source, model_, {source});
  sweep(source, nullptr, [&](std::size_t s) { p.record(g_.slice_time(s), reached_set()); });
  return p;
}

VertexSet ReachSweeper::reached_set() const {
  VertexSet out(touched_);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_vertex(const TemporalGraph& g, Vertex v) {
  if (v >= g.vertex_count())
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

ReachProfile reach_profile(const TemporalGraph& g, Vertex u, Model m) {
  check_vertex(g, u);
  ReachSweeper sweeper(g, m);
  return sweeper.profile(u);
}

bool reaches(const TemporalGraph& g, Vertex u, Vertex v, Model m) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return true;
  ReachSweeper sweeper(g, m);
  sweeper.run(u);
  return sweeper.reached(v);
}

ReachabilityDigraph::ReachabilityDigraph(std::size_t vertex_count, Model model)
    : n_(vertex_count), model_(model), words_((vertex_count + 63) / 64), bits_(n_ * words_) {}

VertexSet ReachabilityDigraph::out_neighbors(Vertex u) const {
  VertexSet out;
  for (Vertex v = 0; v < n_; ++v)
    if (has_arc(u, v)) out.push_back(v);
  return out;
}

VertexSet ReachabilityDigraph::in_neighbors(Vertex u) const {
  VertexSet out;
  for (Vertex v = 0; v < n_; ++v)
    if (has_arc(v, u)) out.push_back(v);
  return out;
}

std::size_t ReachabilityDigraph::arc_count() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

ReachabilityDigraph reachability_digraph(const TemporalGraph& g, Model m, unsigned threads) {
  const std::size_t n = g.vertex_count();
  ReachabilityDigraph r(n, m);
  auto work = [&](std::size_t begin, std::size_t end) {
    ReachSweeper sweeper(g, m);
    for (std::size_t u = begin; u < end; ++u) {
      sweeper.run(static_cast<Vertex>(u));
      for (Vertex v : sweeper.reached_set())
        if (v != u) r.set_arc(static_cast<Vertex>(u), v);
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    work(0, n);
    return r;
  }
  // Each worker writes whole rows, which occupy disjoint words.
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = t * chunk, end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return r;
}

SimpleGraph symmetric_core(const ReachabilityDigraph& r) {
  SimpleGraph f(r.vertex_count());
  for (Vertex u = 0; u < r.vertex_count(); ++u)
    for (Vertex v = u + 1; v < r.vertex_count(); ++v)
      if (r.has_arc(u, v) && r.has_arc(v, u)) f.add_edge(u, v);
  return f;
}

SimpleGraph underlying_graph(const ReachabilityDigraph& r) {
  SimpleGraph f(r.vertex_count());
  for (Vertex u = 0; u < r.vertex_count(); ++u)
    for (Vertex v = u + 1; v < r.vertex_count(); ++v)
      if (r.has_arc(u, v) || r.has_arc(v, u)) f.add_edge(u, v);
  return f;
}

}  // namespace tempconn
