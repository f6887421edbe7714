#include "recolor/chordal.hpp"

#include <algorithm>
#include <set>

namespace recolor {

namespace {

// Maximum cardinality search. Returns the visit order; its reverse is a
// perfect elimination ordering iff g is chordal.
std::vector<Vertex> mcs_visit_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  // buckets[w] holds unvisited vertices of weight w, ordered by id.
  std::vector<std::set<Vertex>> buckets(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 0; v < n; ++v) buckets[0].insert(v);
  int top = 0;
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    while (top > 0 && buckets[static_cast<std::size_t>(top)].empty()) --top;
    auto& bucket = buckets[static_cast<std::size_t>(top)];
    Vertex v = *bucket.begin();
    bucket.erase(bucket.begin());
    done[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (done[wi]) continue;
      buckets[static_cast<std::size_t>(weight[wi])].erase(w);
      ++weight[wi];
      buckets[static_cast<std::size_t>(weight[wi])].insert(w);
      top = std::max(top, weight[wi]);
    }
  }
  return order;
}

}  // namespace

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (order.size() != n) return false;
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (!g.contains(v) || pos[static_cast<std::size_t>(v)] != -1) return false;
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  // Later neighbors of v minus its earliest later neighbor p must all be
  // adjacent to p; this is equivalent to every later neighborhood being a clique.
  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] &&
          (parent == -1 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(parent)]))
        parent = w;
    if (parent == -1) continue;
    for (Vertex w : g.neighbors(v))
      if (w != parent && pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] &&
          !g.has_edge(parent, w))
        return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g) {
  auto order = mcs_visit_order(g);
  std::reverse(order.begin(), order.end());
  if (!is_perfect_elimination_ordering(g, order)) return std::nullopt;
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

std::vector<Vertex> max_clique_chordal(const Graph& g) {
  if (g.empty()) throw InputError("max_clique_chordal: empty graph");
  auto peo = perfect_elimination_ordering(g);
  if (!peo) throw InputError("max_clique_chordal: graph is not chordal");
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < peo->size(); ++i) pos[static_cast<std::size_t>((*peo)[i])] = static_cast<int>(i);
  std::vector<Vertex> best;
  for (Vertex v : *peo) {
    std::vector<Vertex> clique{v};
    for (Vertex w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) clique.push_back(w);
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::optional<Coloring> greedy_chordal_coloring(const Graph& g, int k) {
  auto peo = perfect_elimination_ordering(g);
  if (!peo) throw InputError("greedy_chordal_coloring: graph is not chordal");
  if (k < 0) throw InputError("greedy_chordal_coloring: negative k");
  std::vector<Color> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<char> used(static_cast<std::size_t>(k) + 2, 0);
  for (auto it = peo->rbegin(); it != peo->rend(); ++it) {
    Vertex v = *it;
    std::fill(used.begin(), used.end(), 0);
    for (Vertex w : g.neighbors(v)) {
      Color c = colors[static_cast<std::size_t>(w)];
      if (c != 0 && c <= k) used[c] = 1;
    }
    Color pick = 0;
    for (int c = 1; c <= k; ++c)
      if (!used[static_cast<std::size_t>(c)]) {
        pick = static_cast<Color>(c);
        break;
      }
    if (pick == 0) return std::nullopt;
    colors[static_cast<std::size_t>(v)] = pick;
  }
  return Coloring(k, std::move(colors));
}

}  // namespace recolor
