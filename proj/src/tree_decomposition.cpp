#include "recolor/tree_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "recolor/chordal.hpp"

namespace recolor {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Forget: return "forget";
    case NodeKind::Introduce: return "introduce";
    case NodeKind::Join: return "join";
  }
  return "?";
}

std::vector<int> NiceTreeDecomposition::postorder() const {
  std::vector<int> order;
  if (root < 0) return order;
  order.reserve(nodes.size());
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [u, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(u);
      continue;
    }
    stack.emplace_back(u, true);
    const auto& ch = nodes[static_cast<std::size_t>(u)].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, false);
  }
  return order;
}

int td_width(const NiceTreeDecomposition& td) {
  if (td.nodes.empty()) throw InputError("td_width: empty decomposition");
  std::size_t widest = 0;
  for (const auto& node : td.nodes) widest = std::max(widest, node.bag.size());
  return static_cast<int>(widest) - 1;
}

long long td_size_budget(long long n, long long t, long long w) {
  if (n < 1 || w < 1 || t < 0 || t > n) throw InputError("td_size_budget: requires n>=1, w>=1, 0<=t<=n");
  return 2 * n - t + (w + 2) * std::max(0LL, n - t - 1);
}

namespace {

// Scratch state for repeated classification against one host graph.
class Classifier {
 public:
  explicit Classifier(const Graph& g)
      : g_(g), in_sub_(static_cast<std::size_t>(g.vertex_count()), 0),
        in_terms_(static_cast<std::size_t>(g.vertex_count()), 0),
        seen_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  OperationChoice classify(std::span<const Vertex> vertices, std::span<const Vertex> terminals) {
    if (vertices.size() == terminals.size()) return LeafDone{};
    ++epoch_;
    for (Vertex v : vertices) in_sub_[idx(v)] = epoch_;
    for (Vertex v : terminals) in_terms_[idx(v)] = epoch_;
    auto outside = [&](Vertex w) { return in_sub_[idx(w)] == epoch_ && in_terms_[idx(w)] != epoch_; };

    // Component of G-T through the lowest non-terminal, and whether it is all of G-T.
    Vertex start = -1;
    std::size_t rest = 0;
    for (Vertex v : vertices)
      if (in_terms_[idx(v)] != epoch_) {
        if (start == -1) start = v;
        ++rest;
      }
    std::vector<Vertex> component{start};
    seen_[idx(start)] = epoch_;
    for (std::size_t head = 0; head < component.size(); ++head)
      for (Vertex w : g_.neighbors(component[head]))
        if (outside(w) && seen_[idx(w)] != epoch_) {
          seen_[idx(w)] = epoch_;
          component.push_back(w);
        }
    if (component.size() < rest) {
      std::sort(component.begin(), component.end());
      return JoinChoice{std::move(component)};
    }
    for (Vertex t : terminals) {
      bool isolated = std::none_of(g_.neighbors(t).begin(), g_.neighbors(t).end(), outside);
      if (isolated) return IntroduceChoice{t};
    }
    for (Vertex u : vertices) {
      if (!outside(u)) continue;
      bool universal = std::all_of(terminals.begin(), terminals.end(),
                                   [&](Vertex t) { return g_.has_edge(u, t); });
      if (universal) return ForgetChoice{u};
    }
    throw InputError("classify_next_operation: no applicable operation (host not chordal?)");
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  const Graph& g_;
  std::vector<unsigned> in_sub_, in_terms_, seen_;
  unsigned epoch_ = 0;
};

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw InputError("duplicate vertex in vertex set");
  return v;
}

std::vector<Vertex> without(const std::vector<Vertex>& v, Vertex x) {
  std::vector<Vertex> out;
  out.reserve(v.size());
  for (Vertex y : v)
    if (y != x) out.push_back(y);
  return out;
}

std::vector<Vertex> with(const std::vector<Vertex>& v, Vertex x) {
  std::vector<Vertex> out = v;
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return out;
}

NiceTreeDecomposition build_unchecked(const Graph& g, std::vector<Vertex> root_clique) {
  struct Task {
    std::vector<Vertex> vertices, terminals;
    int parent;
  };
  NiceTreeDecomposition td;
  Classifier classifier(g);
  std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;

  std::vector<Task> stack;
  stack.push_back({std::move(all), std::move(root_clique), -1});
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const int id = static_cast<int>(td.nodes.size());
    if (task.parent >= 0) td.nodes[static_cast<std::size_t>(task.parent)].children.push_back(id);
    else td.root = id;

    TdNode node;
    node.bag = task.terminals;
    OperationChoice choice = classifier.classify(task.vertices, task.terminals);
    std::vector<Task> children;
    if (std::holds_alternative<LeafDone>(choice)) {
      node.kind = NodeKind::Leaf;
    } else if (auto* join = std::get_if<JoinChoice>(&choice)) {
      node.kind = NodeKind::Join;
      std::vector<Vertex> first, second;
      std::set_union(task.terminals.begin(), task.terminals.end(), join->component.begin(),
                     join->component.end(), std::back_inserter(first));
      std::set_difference(task.vertices.begin(), task.vertices.end(), join->component.begin(),
                          join->component.end(), std::back_inserter(second));
      children.push_back({std::move(first), task.terminals, id});
      children.push_back({std::move(second), task.terminals, id});
    } else if (auto* intro = std::get_if<IntroduceChoice>(&choice)) {
      node.kind = NodeKind::Introduce;
      node.vertex = intro->vertex;
      children.push_back({without(task.vertices, intro->vertex), without(task.terminals, intro->vertex), id});
    } else {
      auto forget = std::get<ForgetChoice>(choice);
      node.kind = NodeKind::Forget;
      node.vertex = forget.vertex;
      children.push_back({task.vertices, with(task.terminals, forget.vertex), id});
    }
    td.nodes.push_back(std::move(node));
    // Pushed in reverse so the first child is expanded (and numbered) first.
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return td;
}

// Minimum-degree elimination fill-in; returns a chordal supergraph of g.
Graph triangulate(const Graph& g) {
  if (is_chordal(g)) return g;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  std::set<Edge> all_edges;
  for (auto e : g.edges()) all_edges.insert(e);
  std::vector<char> gone(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
      if (!gone[static_cast<std::size_t>(v)] &&
          (best == -1 || adj[static_cast<std::size_t>(v)].size() < adj[static_cast<std::size_t>(best)].size()))
        best = v;
    const auto& nb = adj[static_cast<std::size_t>(best)];
    std::vector<Vertex> around(nb.begin(), nb.end());
    for (std::size_t i = 0; i < around.size(); ++i)
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        Vertex a = around[i], b = around[j];
        if (adj[static_cast<std::size_t>(a)].insert(b).second) {
          adj[static_cast<std::size_t>(b)].insert(a);
          all_edges.insert({std::min(a, b), std::max(a, b)});
        }
      }
    for (Vertex w : around) adj[static_cast<std::size_t>(w)].erase(best);
    gone[static_cast<std::size_t>(best)] = 1;
  }
  std::vector<Edge> edges(all_edges.begin(), all_edges.end());
  return Graph(g.vertex_count(), edges);
}

}  // namespace

OperationChoice classify_next_operation(const TerminalGraph& tg) {
  if (tg.host == nullptr) throw InputError("classify_next_operation: terminal graph without host");
  const Graph& g = *tg.host;
  auto vertices = sorted_unique(tg.vertices);
  auto terminals = sorted_unique(tg.terminals);
  for (Vertex v : vertices)
    if (!g.contains(v)) throw InputError("classify_next_operation: vertex out of range");
  if (!std::includes(vertices.begin(), vertices.end(), terminals.begin(), terminals.end()))
    throw InputError("classify_next_operation: terminals are not a subset of the vertices");
  if (!g.is_clique(terminals)) throw InputError("classify_next_operation: terminals do not form a clique");
  if (!is_chordal(g.induced(vertices))) throw InputError("classify_next_operation: graph is not chordal");
  Classifier classifier(g);
  return classifier.classify(vertices, terminals);
}

NiceTreeDecomposition build_chordal_nice_td(const Graph& g, std::vector<Vertex> root_clique) {
  if (g.empty()) throw InputError("build_chordal_nice_td: empty graph");
  if (!is_chordal(g)) throw InputError("build_chordal_nice_td: graph is not chordal");
  root_clique = sorted_unique(std::move(root_clique));
  for (Vertex v : root_clique)
    if (!g.contains(v)) throw InputError("build_chordal_nice_td: root vertex out of range");
  if (!g.is_clique(root_clique)) throw InputError("build_chordal_nice_td: root set is not a clique");
  return build_unchecked(g, std::move(root_clique));
}

NiceTreeDecomposition build_chordal_nice_td(const Graph& g) {
  if (g.empty()) throw InputError("build_chordal_nice_td: empty graph");
  return build_chordal_nice_td(g, max_clique_chordal(g));
}

NiceTreeDecomposition build_nice_td(const Graph& g, std::vector<Vertex> root) {
  if (g.empty()) throw InputError("build_nice_td: empty graph");
  root = sorted_unique(std::move(root));
  auto edges = g.edges();
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (!g.contains(root[i])) throw InputError("build_nice_td: root vertex out of range");
    for (std::size_t j = i + 1; j < root.size(); ++j)
      if (!g.has_edge(root[i], root[j])) edges.emplace_back(root[i], root[j]);
  }
  Graph host = triangulate(Graph(g.vertex_count(), edges));
  return build_unchecked(host, std::move(root));
}

NiceTreeDecomposition build_nice_td(const Graph& g) {
  if (g.empty()) throw InputError("build_nice_td: empty graph");
  Graph host = triangulate(g);
  return build_unchecked(host, max_clique_chordal(host));
}

std::vector<std::vector<Vertex>> subtree_vertex_sets(const NiceTreeDecomposition& td) {
  std::vector<std::vector<Vertex>> sets(td.nodes.size());
  for (int u : td.postorder()) {
    const auto& node = td.nodes[static_cast<std::size_t>(u)];
    std::vector<Vertex> acc = node.bag;
    for (int c : node.children) {
      std::vector<Vertex> merged;
      const auto& cs = sets[static_cast<std::size_t>(c)];
      std::set_union(acc.begin(), acc.end(), cs.begin(), cs.end(), std::back_inserter(merged));
      acc = std::move(merged);
    }
    sets[static_cast<std::size_t>(u)] = std::move(acc);
  }
  return sets;
}

TdValidation validate_nice_td(const NiceTreeDecomposition& td, const Graph& g, bool chordal_mode) {
  auto fail = [](int node, const std::string& why) {
    return TdValidation{false, "node " + std::to_string(node) + ": " + why};
  };
  const int count = static_cast<int>(td.nodes.size());
  if (count == 0) return {false, "empty decomposition"};
  if (td.root < 0 || td.root >= count) return {false, "root index out of range"};

  // Tree shape: every node reached exactly once from the root.
  std::vector<int> reached(static_cast<std::size_t>(count), 0);
  std::vector<int> stack{td.root};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (reached[static_cast<std::size_t>(u)]++) return fail(u, "reached twice (not a tree)");
    for (int c : td.nodes[static_cast<std::size_t>(u)].children) {
      if (c < 0 || c >= count) return fail(u, "child index out of range");
      stack.push_back(c);
    }
  }
  for (int u = 0; u < count; ++u)
    if (!reached[static_cast<std::size_t>(u)]) return fail(u, "unreachable from the root");

  for (int u = 0; u < count; ++u) {
    const auto& bag = td.nodes[static_cast<std::size_t>(u)].bag;
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (!g.contains(bag[i])) return fail(u, "bag vertex out of range");
      if (i > 0 && bag[i - 1] >= bag[i]) return fail(u, "bag not strictly increasing");
    }
    if (chordal_mode && !g.is_clique(bag)) return fail(u, "bag is not a clique");
  }

  const auto sets = subtree_vertex_sets(td);
  auto set_of = [&](int u) -> const std::vector<Vertex>& { return sets[static_cast<std::size_t>(u)]; };
  for (int u = 0; u < count; ++u) {
    const auto& node = td.nodes[static_cast<std::size_t>(u)];
    const auto& bag = node.bag;
    const auto& vs = set_of(u);
    const auto nchildren = node.children.size();
    switch (node.kind) {
      case NodeKind::Leaf:
        if (nchildren != 0) return fail(u, "leaf with children");
        break;
      case NodeKind::Forget: {
        if (nchildren != 1) return fail(u, "forget node needs exactly one child");
        const auto& child = td.nodes[static_cast<std::size_t>(node.children[0])];
        if (std::binary_search(bag.begin(), bag.end(), node.vertex)) return fail(u, "forgotten vertex still in bag");
        if (child.bag != with(bag, node.vertex)) return fail(u, "child bag is not bag plus the forgotten vertex");
        break;
      }
      case NodeKind::Introduce: {
        if (nchildren != 1) return fail(u, "introduce node needs exactly one child");
        const int c = node.children[0];
        const auto& child = td.nodes[static_cast<std::size_t>(c)];
        const Vertex v = node.vertex;
        if (!std::binary_search(bag.begin(), bag.end(), v)) return fail(u, "introduced vertex not in bag");
        if (child.bag != without(bag, v)) return fail(u, "child bag is not bag minus the introduced vertex");
        if (std::binary_search(set_of(c).begin(), set_of(c).end(), v))
          return fail(u, "introduced vertex already present below");
        if (vs == bag) return fail(u, "introduce on a leaf-shaped terminal graph (T = V)");
        for (Vertex w : g.neighbors(v))
          if (std::binary_search(vs.begin(), vs.end(), w) && !std::binary_search(bag.begin(), bag.end(), w))
            return fail(u, "introduced vertex " + std::to_string(v) + " has neighbor " + std::to_string(w) +
                               " outside the bag");
        break;
      }
      case NodeKind::Join: {
        if (nchildren != 2) return fail(u, "join node needs exactly two children");
        const int a = node.children[0], b = node.children[1];
        if (td.nodes[static_cast<std::size_t>(a)].bag != bag || td.nodes[static_cast<std::size_t>(b)].bag != bag)
          return fail(u, "join children must carry the same bag");
        std::vector<Vertex> common;
        std::set_intersection(set_of(a).begin(), set_of(a).end(), set_of(b).begin(), set_of(b).end(),
                              std::back_inserter(common));
        if (common != bag) return fail(u, "join sides share a vertex outside the bag");
        if (set_of(a) == bag || set_of(b) == bag) return fail(u, "join side equals the bag");
        std::vector<char> side(static_cast<std::size_t>(g.vertex_count()), 0);
        for (Vertex x : set_of(a)) side[static_cast<std::size_t>(x)] |= 1;
        for (Vertex x : set_of(b)) side[static_cast<std::size_t>(x)] |= 2;
        for (Vertex x : set_of(a)) {
          if (side[static_cast<std::size_t>(x)] != 1) continue;
          for (Vertex y : g.neighbors(x))
            if (side[static_cast<std::size_t>(y)] == 2)
              return fail(u, "edge " + std::to_string(x) + "-" + std::to_string(y) + " lies in neither side");
        }
        break;
      }
    }
  }
  if (set_of(td.root).size() != static_cast<std::size_t>(g.vertex_count()))
    return {false, "root subgraph does not cover every vertex"};
  return {};
}

}  // namespace recolor
