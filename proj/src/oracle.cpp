#include "recolor/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include "recolor/chordal.hpp"

namespace recolor {

namespace {

std::vector<int> components_of_subgraph(const SolutionGraph& sg, const std::vector<std::size_t>& positions) {
  // Union-find over edges whose endpoints agree on `positions`.
  std::vector<int> parent(sg.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::size_t i = 0; i < sg.size(); ++i) {
    auto a = sg.coloring(i);
    for (int j : sg.adjacency[i]) {
      if (static_cast<std::size_t>(j) < i) continue;
      auto b = sg.coloring(static_cast<std::size_t>(j));
      bool same = std::all_of(positions.begin(), positions.end(), [&](std::size_t p) { return a[p] == b[p]; });
      if (!same) continue;
      int ra = find(static_cast<int>(i)), rb = find(j);
      if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
  }
  std::vector<int> root(sg.size());
  for (std::size_t i = 0; i < sg.size(); ++i) root[i] = find(static_cast<int>(i));
  return root;
}

std::vector<std::size_t> checked_positions(const SolutionGraph& sg, std::span<const Vertex> terminals) {
  std::vector<std::size_t> pos;
  for (Vertex t : terminals) {
    if (t < 0 || t >= sg.n) throw InputError("terminal " + std::to_string(t) + " is out of range");
    pos.push_back(static_cast<std::size_t>(t));
  }
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) throw InputError("repeated terminal");
  return pos;
}

}  // namespace

std::optional<int> SolutionGraph::find(std::span<const Color> colors) const {
  if (colors.size() != static_cast<std::size_t>(n)) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto c = coloring(mid);
    if (std::lexicographical_compare(c.begin(), c.end(), colors.begin(), colors.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::ranges::equal(coloring(lo), colors)) return static_cast<int>(lo);
  return std::nullopt;
}

SolutionGraph enumerate_solution_graph(const Graph& g, int k, OracleBudget budget, const ColorListAssignment* lists) {
  if (k < 0) throw InputError("enumerate_solution_graph: negative k");
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  if (auto peo = perfect_elimination_ordering(g)) {
    order.assign(peo->rbegin(), peo->rend());
  } else {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::vector<Vertex>> earlier(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : g.neighbors(order[i]))
      if (rank[static_cast<std::size_t>(w)] < static_cast<int>(i)) earlier[i].push_back(w);

  SolutionGraph sg;
  sg.k = k;
  sg.n = n;
  std::vector<Color> current(static_cast<std::size_t>(n), 0);
  std::size_t found = 0;
  auto allowed = [&](std::size_t i, Color c) {
    Vertex v = order[i];
    if (lists && !lists->allows(v, c)) return false;
    return std::none_of(earlier[i].begin(), earlier[i].end(),
                        [&](Vertex w) { return current[static_cast<std::size_t>(w)] == c; });
  };
  if (n == 0) {
    found = 1;
  } else if (k > 0) {
    std::size_t depth = 0;
    while (true) {
      Vertex v = order[depth];
      Color c = current[static_cast<std::size_t>(v)];
      do ++c;
      while (c <= k && !allowed(depth, c));
      if (c > k) {
        current[static_cast<std::size_t>(v)] = 0;
        if (depth == 0) break;
        --depth;
        continue;
      }
      current[static_cast<std::size_t>(v)] = c;
      if (depth + 1 < order.size()) {
        ++depth;
        continue;
      }
      if (++found > budget.max_colorings)
        throw BudgetExceeded("enumerate_solution_graph: more than " + std::to_string(budget.max_colorings) +
                                 " colorings",
                             found);
      sg.flat.insert(sg.flat.end(), current.begin(), current.end());
    }
  }
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<std::size_t> idx(found);
  std::iota(idx.begin(), idx.end(), 0);
  if (nn > 0) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(sg.flat.begin() + static_cast<std::ptrdiff_t>(a * nn),
                                          sg.flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * nn),
                                          sg.flat.begin() + static_cast<std::ptrdiff_t>(b * nn),
                                          sg.flat.begin() + static_cast<std::ptrdiff_t>((b + 1) * nn));
    });
    std::vector<Color> sorted;
    sorted.reserve(sg.flat.size());
    for (std::size_t i : idx)
      sorted.insert(sorted.end(), sg.flat.begin() + static_cast<std::ptrdiff_t>(i * nn),
                    sg.flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * nn));
    sg.flat = std::move(sorted);
  }
  sg.adjacency.assign(found, {});
  std::vector<Color> probe(nn);
  for (std::size_t i = 0; i < found; ++i) {
    auto c = sg.coloring(i);
    std::copy(c.begin(), c.end(), probe.begin());
    for (std::size_t v = 0; v < nn; ++v) {
      const Color own = probe[v];
      for (int d = own + 1; d <= k; ++d) {
        probe[v] = static_cast<Color>(d);
        if (auto j = sg.find(probe)) {
          sg.adjacency[i].push_back(*j);
          sg.adjacency[static_cast<std::size_t>(*j)].push_back(static_cast<int>(i));
        }
      }
      probe[v] = own;
    }
  }
  for (auto& row : sg.adjacency) std::sort(row.begin(), row.end());
  return sg;
}

bool oracle_reachable(const Graph& g, int k, const Coloring& alpha, const Coloring& beta, OracleBudget budget) {
  for (const Coloring* c : {&alpha, &beta}) {
    if (c->k() != k) throw InputError("oracle_reachable: coloring uses a different k");
    if (!c->is_total_over(g.vertex_count())) throw InputError("oracle_reachable: coloring is not total");
    if (!is_proper_coloring(g, *c)) throw InputError("oracle_reachable: coloring is not proper");
  }
  if (alpha == beta) return true;
  auto key = [](std::span<const Color> c) {
    std::string s(c.size() * sizeof(Color), '\0');
    if (!c.empty()) std::memcpy(s.data(), c.data(), s.size());
    return s;
  };
  const std::string target = key(beta.colors());
  std::unordered_set<std::string> seen{key(alpha.colors())};
  std::deque<std::vector<Color>> queue{std::vector<Color>(alpha.colors().begin(), alpha.colors().end())};
  while (!queue.empty()) {
    std::vector<Color> cur = std::move(queue.front());
    queue.pop_front();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const Color own = cur[static_cast<std::size_t>(v)];
      for (int d = 1; d <= k; ++d) {
        if (d == own) continue;
        bool ok = true;
        for (Vertex w : g.neighbors(v))
          if (cur[static_cast<std::size_t>(w)] == d) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur[static_cast<std::size_t>(v)] = static_cast<Color>(d);
        std::string s = key(cur);
        if (s == target) return true;
        if (seen.insert(std::move(s)).second) {
          if (seen.size() > budget.max_colorings)
            throw BudgetExceeded("oracle_reachable: search exceeded " + std::to_string(budget.max_colorings) +
                                     " colorings",
                                 seen.size());
          queue.push_back(cur);
        }
        cur[static_cast<std::size_t>(v)] = own;
      }
    }
  }
  return false;
}

Partition label_components(const SolutionGraph& sg, std::span<const Vertex> terminals) {
  auto roots = components_of_subgraph(sg, checked_positions(sg, terminals));
  Partition out;
  out.part_of.assign(sg.size(), -1);
  std::vector<int> id_of_root(sg.size(), -1);
  for (std::size_t i = 0; i < sg.size(); ++i) {
    auto r = static_cast<std::size_t>(roots[i]);
    if (id_of_root[r] == -1) id_of_root[r] = out.count++;
    out.part_of[i] = id_of_root[r];
  }
  return out;
}

Csg contract_solution_graph(const SolutionGraph& sg, std::span<const Vertex> terminals, const Partition& parts) {
  auto pos = checked_positions(sg, terminals);
  std::vector<Vertex> sorted_terms(pos.begin(), pos.end());
  Csg out(sg.k, sorted_terms);
  std::vector<Color> label(pos.size());
  std::vector<char> made(static_cast<std::size_t>(parts.count), 0);
  for (std::size_t i = 0; i < sg.size(); ++i) {
    auto p = static_cast<std::size_t>(parts.part_of[i]);
    if (made[p]) continue;
    if (p != out.node_count()) throw InputError("contract_solution_graph: parts are not numbered by lowest member");
    auto c = sg.coloring(i);
    for (std::size_t j = 0; j < pos.size(); ++j) label[j] = c[pos[j]];
    out.add_node(label);
    made[p] = 1;
  }
  for (std::size_t i = 0; i < sg.size(); ++i)
    for (int j : sg.adjacency[i]) {
      int a = parts.part_of[i], b = parts.part_of[static_cast<std::size_t>(j)];
      if (a != b && static_cast<std::size_t>(j) > i) out.add_edge(a, b);
    }
  out.finalize();
  return out;
}

Csg contract_solution_graph(const SolutionGraph& sg, std::span<const Vertex> terminals) {
  return contract_solution_graph(sg, terminals, label_components(sg, terminals));
}

CertificateCheck verify_csg_certificate(const Csg& csg, const Partition& parts, const SolutionGraph& sg,
                                        std::span<const Vertex> terminals) {
  auto fail = [](char property, std::string detail) { return CertificateCheck{false, property, std::move(detail)}; };
  const std::size_t nodes = csg.node_count();
  // (a)
  if (parts.part_of.size() != sg.size()) return fail('a', "partition does not cover every coloring");
  std::vector<std::vector<int>> members(nodes);
  for (std::size_t i = 0; i < sg.size(); ++i) {
    int p = parts.part_of[i];
    if (p < 0 || static_cast<std::size_t>(p) >= nodes)
      return fail('a', "coloring " + std::to_string(i) + " is assigned to no node");
    members[static_cast<std::size_t>(p)].push_back(static_cast<int>(i));
  }
  for (std::size_t x = 0; x < nodes; ++x)
    if (members[x].empty()) return fail('a', "node " + std::to_string(x) + " has an empty part");
  // (b)
  auto pos = checked_positions(sg, terminals);
  if (!std::ranges::equal(csg.terminals(), std::vector<Vertex>(pos.begin(), pos.end())))
    return fail('b', "terminal order differs");
  for (std::size_t i = 0; i < sg.size(); ++i) {
    auto c = sg.coloring(i);
    auto lab = csg.label(parts.part_of[i]);
    for (std::size_t j = 0; j < pos.size(); ++j)
      if (c[pos[j]] != lab[j])
        return fail('b', "coloring " + std::to_string(i) + " does not restrict to the label of node " +
                             std::to_string(parts.part_of[i]));
  }
  // (c)
  if (auto e = csg.equal_label_edge())
    return fail('c', "adjacent nodes " + std::to_string(e->first) + " and " + std::to_string(e->second) +
                         " share a label");
  // (d)
  for (std::size_t x = 0; x < nodes; ++x) {
    std::vector<int> stack{members[x][0]};
    std::unordered_set<int> seen{members[x][0]};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j : sg.adjacency[static_cast<std::size_t>(i)])
        if (parts.part_of[static_cast<std::size_t>(j)] == static_cast<int>(x) && seen.insert(j).second)
          stack.push_back(j);
    }
    if (seen.size() != members[x].size()) return fail('d', "part of node " + std::to_string(x) + " is disconnected");
  }
  // (e)
  std::vector<std::vector<NodeId>> cross(nodes);
  for (std::size_t i = 0; i < sg.size(); ++i)
    for (int j : sg.adjacency[i]) {
      int a = parts.part_of[i], b = parts.part_of[static_cast<std::size_t>(j)];
      if (a != b) cross[static_cast<std::size_t>(a)].push_back(b);
    }
  for (std::size_t x = 0; x < nodes; ++x) {
    auto& row = cross[x];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    auto have = csg.neighbors(static_cast<NodeId>(x));
    if (!std::ranges::equal(row, have))
      return fail('e', "edges at node " + std::to_string(x) + " do not match cross-adjacent colorings");
  }
  return {};
}

namespace {

// Color refinement on the disjoint union of both graphs, seeded with labels.
std::pair<std::vector<int>, std::vector<int>> refine(const Csg& h1, const Csg& h2) {
  const std::size_t n1 = h1.node_count(), n2 = h2.node_count();
  std::vector<int> color(n1 + n2);
  {
    std::map<std::vector<Color>, int> seed;
    for (std::size_t x = 0; x < n1 + n2; ++x) {
      auto lab = x < n1 ? h1.label(static_cast<NodeId>(x)) : h2.label(static_cast<NodeId>(x - n1));
      seed.emplace(std::vector<Color>(lab.begin(), lab.end()), 0);
    }
    int next = 0;
    for (auto& [lab, id] : seed) id = next++;
    for (std::size_t x = 0; x < n1 + n2; ++x) {
      auto lab = x < n1 ? h1.label(static_cast<NodeId>(x)) : h2.label(static_cast<NodeId>(x - n1));
      color[x] = seed.at(std::vector<Color>(lab.begin(), lab.end()));
    }
  }
  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<std::vector<int>> sigs(n1 + n2);
    for (std::size_t x = 0; x < n1 + n2; ++x) {
      auto nb = x < n1 ? h1.neighbors(static_cast<NodeId>(x)) : h2.neighbors(static_cast<NodeId>(x - n1));
      auto& s = sigs[x];
      s.push_back(color[x]);
      std::size_t offset = x < n1 ? 0 : n1;
      for (NodeId y : nb) s.push_back(color[offset + static_cast<std::size_t>(y)]);
      std::sort(s.begin() + 1, s.end());
      sig_id.emplace(s, 0);
    }
    int next = 0;
    for (auto& [s, id] : sig_id) id = next++;
    for (std::size_t x = 0; x < n1 + n2; ++x) color[x] = sig_id.at(sigs[x]);
    if (next == classes) break;
    classes = next;
  }
  return {std::vector<int>(color.begin(), color.begin() + static_cast<std::ptrdiff_t>(n1)),
          std::vector<int>(color.begin() + static_cast<std::ptrdiff_t>(n1), color.end())};
}

}  // namespace

std::optional<std::vector<NodeId>> find_labeled_isomorphism(const Csg& h1, const Csg& h2, IsomorphismLimits limits) {
  if (h1.k() != h2.k() || !std::ranges::equal(h1.terminals(), h2.terminals())) return std::nullopt;
  const std::size_t n = h1.node_count();
  if (n != h2.node_count() || h1.edge_count() != h2.edge_count()) return std::nullopt;
  if (n > limits.max_nodes)
    throw BudgetExceeded("labeled_isomorphic: " + std::to_string(n) + " nodes exceed the internal cap", n);
  auto [c1, c2] = refine(h1, h2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::map<int, std::vector<NodeId>> by_class;
  for (std::size_t y = 0; y < n; ++y) by_class[c2[y]].push_back(static_cast<NodeId>(y));

  // Visit h1 in BFS order so each node has mapped neighbors when possible.
  std::vector<NodeId> order;
  {
    std::vector<char> seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::deque<NodeId> q{static_cast<NodeId>(s)};
      while (!q.empty()) {
        NodeId x = q.front();
        q.pop_front();
        order.push_back(x);
        for (NodeId y : h1.neighbors(x))
          if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = 1;
            q.push_back(y);
          }
      }
    }
  }
  std::vector<NodeId> map(n, -1), inverse(n, -1);
  std::vector<std::size_t> cursor(n, 0);
  std::size_t steps = 0;
  auto consistent = [&](NodeId x, NodeId y) {
    std::size_t mapped = 0;
    for (NodeId x2 : h1.neighbors(x)) {
      NodeId y2 = map[static_cast<std::size_t>(x2)];
      if (y2 < 0) continue;
      if (!h2.has_edge(y, y2)) return false;
      ++mapped;
    }
    std::size_t mapped2 = 0;
    for (NodeId y2 : h2.neighbors(y))
      if (inverse[static_cast<std::size_t>(y2)] >= 0) ++mapped2;
    return mapped == mapped2;
  };
  std::size_t depth = 0;
  while (depth < n) {
    NodeId x = order[depth];
    const auto& cands = by_class[c1[static_cast<std::size_t>(x)]];
    if (map[static_cast<std::size_t>(x)] >= 0) {
      inverse[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] = -1;
      map[static_cast<std::size_t>(x)] = -1;
    }
    bool placed = false;
    while (cursor[depth] < cands.size()) {
      if (++steps > limits.max_steps) throw BudgetExceeded("labeled_isomorphic: search step cap reached", steps);
      NodeId y = cands[cursor[depth]++];
      if (inverse[static_cast<std::size_t>(y)] >= 0 || !consistent(x, y)) continue;
      map[static_cast<std::size_t>(x)] = y;
      inverse[static_cast<std::size_t>(y)] = x;
      placed = true;
      break;
    }
    if (placed) {
      ++depth;
      if (depth < n) cursor[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
  }
  return map;
}

bool labeled_isomorphic(const Csg& h1, const Csg& h2, IsomorphismLimits limits) {
  return find_labeled_isomorphism(h1, h2, limits).has_value();
}

}  // namespace recolor
