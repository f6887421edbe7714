#include "recolor/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace recolor {

namespace {

// Vertex-disjoint path counting on the split graph: vertex v becomes
// in(v) -> out(v) with capacity 1, and each edge uv becomes the two arcs
// out(u) -> in(v) and out(v) -> in(u) with unbounded capacity.
class VertexFlow {
 public:
  explicit VertexFlow(const Graph& g) : g_(g), n_(static_cast<std::size_t>(g.vertex_count())) {}

  // Number of internally vertex-disjoint s-t paths, capped at `limit`.
  int disjoint_paths(Vertex s, Vertex t, int limit) {
    inner_.assign(n_, 0);
    arc_.clear();
    int flow = 0;
    while (flow < limit && augment(s, t)) ++flow;
    return flow;
  }

 private:
  static std::size_t in(Vertex v) { return 2 * static_cast<std::size_t>(v); }
  static std::size_t out(Vertex v) { return 2 * static_cast<std::size_t>(v) + 1; }

  bool augment(Vertex s, Vertex t) {
    std::vector<long> parent(2 * n_, -2);
    std::deque<std::size_t> queue{out(s)};
    parent[out(s)] = -1;
    while (!queue.empty() && parent[in(t)] == -2) {
      std::size_t x = queue.front();
      queue.pop_front();
      auto v = static_cast<Vertex>(x / 2);
      auto visit = [&](std::size_t y) {
        if (parent[y] != -2) return;
        parent[y] = static_cast<long>(x);
        queue.push_back(y);
      };
      if (x == in(v)) {
        if (v != t && inner_[static_cast<std::size_t>(v)] == 0) visit(out(v));
        for (Vertex u : g_.neighbors(v))
          if (arc_flow(u, v) > 0) visit(out(u));
      } else {
        for (Vertex u : g_.neighbors(v))
          if (u != s) visit(in(u));
        if (v != s && inner_[static_cast<std::size_t>(v)] > 0) visit(in(v));
      }
    }
    if (parent[in(t)] == -2) return false;
    for (std::size_t y = in(t); parent[y] != -1;) {
      auto x = static_cast<std::size_t>(parent[y]);
      auto vx = static_cast<Vertex>(x / 2);
      auto vy = static_cast<Vertex>(y / 2);
      if (vx == vy)
        inner_[static_cast<std::size_t>(vx)] = (x == in(vx)) ? 1 : 0;
      else if (x == out(vx))
        ++arc_[key(vx, vy)];
      else
        --arc_[key(vy, vx)];
      y = x;
    }
    return true;
  }

  int arc_flow(Vertex u, Vertex v) const {
    auto it = arc_.find(key(u, v));
    return it == arc_.end() ? 0 : it->second;
  }
  static std::int64_t key(Vertex u, Vertex v) {
    return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<int> inner_;
  std::unordered_map<std::int64_t, int> arc_;  // flow on out(u) -> in(v)
};

}  // namespace

bool is_l_connected(const Graph& g, int l) {
  if (l < 1) throw InputError("is_l_connected: l must be at least 1");
  const int n = g.vertex_count();
  if (n < l + 1) return false;
  if (!is_connected(g)) return false;
  if (l == 1) return true;
  // Any cut S with |S| < l misses one of the vertices 0..l-1; that vertex is
  // separated by S from some non-neighbor, so checking local connectivity
  // from these l sources suffices.
  VertexFlow flow(g);
  for (Vertex s = 0; s < l; ++s)
    for (Vertex t = 0; t < n; ++t) {
      if (t == s || g.has_edge(s, t)) continue;
      if (flow.disjoint_paths(s, t, l) < l) return false;
    }
  return true;
}

LowDegreeReduction reduce_low_degree(const Graph& g, int k) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> degree(n);
  std::vector<char> gone(n, 0);
  std::set<Vertex> candidates;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    degree[static_cast<std::size_t>(v)] = g.degree(v);
    if (degree[static_cast<std::size_t>(v)] <= k - 2) candidates.insert(v);
  }
  LowDegreeReduction out;
  while (!candidates.empty()) {
    Vertex v = *candidates.begin();
    candidates.erase(candidates.begin());
    gone[static_cast<std::size_t>(v)] = 1;
    out.removed.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (gone[wi]) continue;
      if (--degree[wi] <= k - 2) candidates.insert(w);
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) out.kept.push_back(v);
  out.graph = g.induced(out.kept);
  return out;
}

}  // namespace recolor
