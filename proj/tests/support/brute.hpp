#pragma once

// Independent brute-force references for the tests. Nothing here calls the
// library's algorithms beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace brute {

using recolor::Color;
using recolor::Edge;
using recolor::Graph;
using recolor::Vertex;
using Colors = std::vector<Color>;

inline bool adjacent(const Graph& g, Vertex u, Vertex v) {
  for (Vertex w : g.neighbors(u))
    if (w == v) return true;
  return false;
}

inline bool subset_connected(const Graph& g, std::uint32_t mask) {
  if (mask == 0) return true;
  int start = std::countr_zero(mask);
  std::uint32_t seen = 1u << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if ((mask >> w & 1u) && !(seen >> w & 1u)) {
        seen |= 1u << w;
        stack.push_back(w);
      }
  }
  return seen == mask;
}

/// True iff some vertex subset of size >= 4 induces a cycle.
inline bool has_long_induced_cycle(const Graph& g) {
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    bool all_two = true;
    for (int v = 0; v < n && all_two; ++v) {
      if (!(mask >> v & 1u)) continue;
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += mask >> w & 1u;
      all_two = d == 2;
    }
    if (all_two && subset_connected(g, mask)) return true;
  }
  return false;
}

inline int clique_number(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      for (int v = u + 1; v < n && clique; ++v)
        if ((mask >> u & 1u) && (mask >> v & 1u) && !adjacent(g, u, v)) clique = false;
    if (clique) best = size;
  }
  return best;
}

/// |V| >= l+1 and deleting any fewer than l vertices leaves a connected graph.
inline bool l_connected(const Graph& g, int l) {
  const int n = g.vertex_count();
  if (n < l + 1) return false;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t cut = 0; cut < (1u << n); ++cut)
    if (std::popcount(cut) < l && !subset_connected(g, full & ~cut)) return false;
  return true;
}

/// Every assignment in 1..k^n kept if proper (and within lists), in
/// lexicographic order.
inline std::vector<Colors> proper_colorings(const Graph& g, int k,
                                            const std::vector<std::vector<Color>>* lists = nullptr) {
  const int n = g.vertex_count();
  std::vector<Colors> out;
  Colors c(static_cast<std::size_t>(n), 1);
  while (true) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) ok = false;
    if (ok && lists)
      for (int v = 0; v < n; ++v) {
        const auto& l = (*lists)[static_cast<std::size_t>(v)];
        if (std::find(l.begin(), l.end(), c[static_cast<std::size_t>(v)]) == l.end()) ok = false;
      }
    if (ok) out.push_back(c);
    int i = n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return out;
}

inline int differing(const Colors& a, const Colors& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

/// Component id per coloring of C_k(g), by quadratic pair scanning.
inline std::vector<int> recolor_components(const std::vector<Colors>& cols) {
  std::vector<int> parent(cols.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (differing(cols[i], cols[j]) == 1) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::vector<int> out(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) out[i] = find(static_cast<int>(i));
  return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (n == 0 || subset_connected(g, (1u << n) - 1)) return g;
  }
}

/// Band chordal graph under a random relabeling: a k-clique on positions
/// 0..k-1, then position i joined to positions i-(k-2)..i-1. `far_end`
/// receives the labels of the last k-1 positions, a clique far from the
/// k-clique.
inline Graph band_graph(int n, int k, std::mt19937_64& rng, std::vector<Vertex>* far_end = nullptr) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  auto add = [&](int a, int b) {
    Vertex u = perm[static_cast<std::size_t>(a)], v = perm[static_cast<std::size_t>(b)];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) add(i, j);
  for (int i = k; i < n; ++i)
    for (int j = i - (k - 2); j < i; ++j) add(j, i);
  std::sort(edges.begin(), edges.end());
  if (far_end) {
    far_end->assign(perm.end() - (k - 1), perm.end());
    std::sort(far_end->begin(), far_end->end());
  }
  return Graph(n, edges);
}

/// One representative per isomorphism class of connected graphs on n
/// vertices (canonical form: smallest edge mask over all relabelings).
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> index(static_cast<std::size_t>(n * n));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[static_cast<std::size_t>(pairs[i].first * n + pairs[i].second)] = static_cast<int>(i);
    index[static_cast<std::size_t>(pairs[i].second * n + pairs[i].first)] = static_cast<int>(i);
  }
  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::uint32_t canon = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u) {
          int a = p[static_cast<std::size_t>(pairs[i].first)], b = p[static_cast<std::size_t>(pairs[i].second)];
          image |= 1u << index[static_cast<std::size_t>(a * n + b)];
        }
      canon = std::min(canon, image);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (canon >> i & 1u) edges.emplace_back(pairs[i].first, pairs[i].second);
    Graph g(n, edges);
    if (n == 0 || subset_connected(g, (1u << n) - 1)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace brute
