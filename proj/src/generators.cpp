#include "recolor/generators.hpp"

#include <algorithm>
#include <random>

#include "recolor/chordal.hpp"

namespace recolor {

namespace {

// Modulo reduction keeps the output identical across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Graph grow_chordal(int n, int k, Seed seed, double small_attach) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  const int base = k - 1;
  for (int u = 0; u < base; ++u)
    for (int v = u + 1; v < base; ++v) edges.emplace_back(u, v);
  std::vector<std::vector<Vertex>> cliques;  // every (k-1)-clique created so far
  {
    std::vector<Vertex> first(static_cast<std::size_t>(base));
    for (int i = 0; i < base; ++i) first[static_cast<std::size_t>(i)] = i;
    cliques.push_back(first);
  }
  for (Vertex v = base; v < n; ++v) {
    std::vector<Vertex> target = cliques[below(rng, cliques.size())];
    const bool small = small_attach > 0 && static_cast<double>(rng() >> 11) * 0x1.0p-53 < small_attach;
    if (small && target.size() > 1)
      target.erase(target.begin() + static_cast<std::ptrdiff_t>(below(rng, target.size())));
    for (Vertex u : target) edges.emplace_back(u, v);
    std::vector<Vertex> grown = target;
    grown.push_back(v);
    if (grown.size() == static_cast<std::size_t>(base)) {
      cliques.push_back(grown);
    } else {
      for (std::size_t drop = 0; drop + 1 < grown.size(); ++drop) {
        std::vector<Vertex> c = grown;
        c.erase(c.begin() + static_cast<std::ptrdiff_t>(drop));
        cliques.push_back(std::move(c));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

}  // namespace

Graph gen_interval_family(int p) {
  if (p < 4) throw InputError("gen_interval_family: p must be at least 4");
  std::vector<Edge> edges{{0, 3}};
  for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i + 2 < p; ++i) edges.emplace_back(i, i + 2);
  Graph g(p, edges);
  for (int i = 0; i < p; ++i) g.set_name(i, "v" + std::to_string(i));
  return g;
}

Coloring gen_interval_coloring(int p, std::span<const int> subset) {
  if (p < 4 || p % 4 != 0) throw InputError("gen_interval_coloring: p must have the form 4q+4");
  const int q = p / 4 - 1;
  std::vector<char> in(static_cast<std::size_t>(q) + 1, 0);
  for (int j : subset) {
    if (j < 1 || j > q) throw InputError("gen_interval_coloring: subset element outside 1..q");
    in[static_cast<std::size_t>(j)] = 1;
  }
  std::vector<Color> colors(static_cast<std::size_t>(p));
  for (int j = 0; j <= q; ++j) {
    const bool s = in[static_cast<std::size_t>(j)];
    colors[static_cast<std::size_t>(4 * j)] = s ? 3 : 4;
    colors[static_cast<std::size_t>(4 * j + 1)] = s ? 4 : 3;
    colors[static_cast<std::size_t>(4 * j + 2)] = 1;
    colors[static_cast<std::size_t>(4 * j + 3)] = 2;
  }
  return Coloring(4, std::move(colors));
}

Graph gen_quadratic_family(int n) {
  if (n < 2) throw InputError("gen_quadratic_family: n must be at least 2");
  auto u = [](int i) { return i - 1; };
  auto v = [n](int i) { return n + i - 1; };
  auto w = [n](int i) { return 2 * n + i - 1; };
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(u(i), v(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (i < j) edges.emplace_back(w(i), w(j));
      edges.emplace_back(std::min(w(i), v(j)), std::max(w(i), v(j)));
    }
  Graph g(3 * n, edges);
  for (int i = 1; i <= n; ++i) {
    g.set_name(u(i), "u" + std::to_string(i));
    g.set_name(v(i), "v" + std::to_string(i));
    g.set_name(w(i), "w" + std::to_string(i));
  }
  return g;
}

Graph gen_random_connected_chordal(int n, int k, int conn, Seed seed) {
  if (k < 3) throw InputError("gen_random_connected_chordal: k must be at least 3");
  if (conn != k - 2) throw InputError("gen_random_connected_chordal: conn must equal k-2");
  if (n < k) throw InputError("gen_random_connected_chordal: n must be at least k");
  return grow_chordal(n, k, seed, 0.0);
}

Graph gen_random_chordal_mixed(int n, int k, Seed seed, double small_attach) {
  if (k < 3) throw InputError("gen_random_chordal_mixed: k must be at least 3");
  if (n < k) throw InputError("gen_random_chordal_mixed: n must be at least k");
  if (small_attach < 0 || small_attach > 1) throw InputError("gen_random_chordal_mixed: probability outside [0,1]");
  return grow_chordal(n, k, seed, small_attach);
}

Graph gen_star_blowup(const Graph& gadget, Vertex hub, int p) {
  if (!gadget.contains(hub)) throw InputError("gen_star_blowup: hub is not a gadget vertex");
  if (p < 1) throw InputError("gen_star_blowup: p must be at least 1");
  const int m = gadget.vertex_count();
  std::vector<Edge> edges;
  std::vector<Vertex> id(static_cast<std::size_t>(m));
  int next = m;
  for (int copy = 0; copy < p; ++copy) {
    for (Vertex x = 0; x < m; ++x)
      id[static_cast<std::size_t>(x)] = (copy == 0 || x == hub) ? x : next++;
    for (auto [a, b] : gadget.edges()) {
      Vertex x = id[static_cast<std::size_t>(a)], y = id[static_cast<std::size_t>(b)];
      edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph(next, edges);
}

Coloring random_chordal_coloring(const Graph& g, int k, Seed seed) {
  auto peo = perfect_elimination_ordering(g);
  if (!peo) throw InputError("random_chordal_coloring: graph is not chordal");
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Color> options;
  for (auto it = peo->rbegin(); it != peo->rend(); ++it) {
    options.clear();
    for (int c = 1; c <= k; ++c) {
      bool taken = false;
      for (Vertex w : g.neighbors(*it))
        if (colors[static_cast<std::size_t>(w)] == c) taken = true;
      if (!taken) options.push_back(static_cast<Color>(c));
    }
    if (options.empty()) throw InputError("random_chordal_coloring: clique number exceeds k");
    colors[static_cast<std::size_t>(*it)] = options[below(rng, options.size())];
  }
  return Coloring(k, std::move(colors));
}

Coloring random_recoloring_walk(const Graph& g, const Coloring& start, int steps, Seed seed) {
  if (!start.is_total_over(g.vertex_count()) || !is_proper_coloring(g, start))
    throw InputError("random_recoloring_walk: start is not a proper coloring");
  const int n = g.vertex_count();
  const int k = start.k();
  if (n == 0 || k < 2) return start;
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(start.colors().begin(), start.colors().end());
  for (int s = 0; s < steps; ++s) {
    auto v = static_cast<Vertex>(below(rng, static_cast<std::uint64_t>(n)));
    auto c = static_cast<Color>(1 + below(rng, static_cast<std::uint64_t>(k)));
    if (c == colors[static_cast<std::size_t>(v)]) continue;
    bool ok = std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                           [&](Vertex w) { return colors[static_cast<std::size_t>(w)] == c; });
    if (ok) colors[static_cast<std::size_t>(v)] = c;
  }
  return Coloring(k, std::move(colors));
}

}  // namespace recolor
