#include "recolor/csg.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace recolor {

namespace {

std::string key_of(std::span<const Color> label) {
  std::string key(label.size() * sizeof(Color), '\0');
  if (!label.empty()) std::memcpy(key.data(), label.data(), key.size());
  return key;
}

void charge(const NodeBudget& budget, std::size_t nodes, const char* where) {
  if (nodes > budget.max_nodes)
    throw BudgetExceeded(std::string(where) + ": " + std::to_string(nodes) + " nodes exceed the budget of " +
                             std::to_string(budget.max_nodes),
                         nodes);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t position_of(std::span<const Vertex> terminals, Vertex v) {
  auto it = std::find(terminals.begin(), terminals.end(), v);
  if (it == terminals.end()) throw InputError("vertex " + std::to_string(v) + " is not a terminal");
  return static_cast<std::size_t>(it - terminals.begin());
}

}  // namespace

Csg::Csg(int k, std::vector<Vertex> terminals) : k_(k), terminals_(std::move(terminals)) {
  if (k_ < 0) throw InputError("Csg: negative k");
  if (!std::is_sorted(terminals_.begin(), terminals_.end()) ||
      std::adjacent_find(terminals_.begin(), terminals_.end()) != terminals_.end())
    throw InputError("Csg: terminal order must be strictly increasing");
}

std::size_t Csg::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.size();
  return twice / 2;
}

bool Csg::has_edge(NodeId x, NodeId y) const {
  auto row = neighbors(x);
  return std::binary_search(row.begin(), row.end(), y);
}

NodeId Csg::add_node(std::span<const Color> label) {
  if (label.size() != arity()) throw InputError("Csg::add_node: label length does not match the terminals");
  labels_.insert(labels_.end(), label.begin(), label.end());
  adjacency_.emplace_back();
  return static_cast<NodeId>(adjacency_.size() - 1);
}

void Csg::add_edge(NodeId x, NodeId y) {
  if (x == y) throw InputError("Csg::add_edge: self-loop");
  adjacency_.at(static_cast<std::size_t>(x)).push_back(y);
  adjacency_.at(static_cast<std::size_t>(y)).push_back(x);
}

void Csg::finalize() {
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
}

std::vector<int> Csg::components() const {
  std::vector<int> comp(node_count(), -1);
  int next = 0;
  std::vector<NodeId> stack;
  for (std::size_t s = 0; s < node_count(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(static_cast<NodeId>(s));
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : neighbors(x))
        if (comp[static_cast<std::size_t>(y)] == -1) {
          comp[static_cast<std::size_t>(y)] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

std::optional<std::pair<NodeId, NodeId>> Csg::equal_label_edge() const {
  for (std::size_t x = 0; x < node_count(); ++x)
    for (NodeId y : neighbors(static_cast<NodeId>(x)))
      if (static_cast<std::size_t>(y) > x && std::ranges::equal(label(static_cast<NodeId>(x)), label(y)))
        return std::pair{static_cast<NodeId>(x), y};
  return std::nullopt;
}

std::string label_text(std::span<const Color> label, int k) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (k > 9 && i > 0) out += ',';
    out += std::to_string(label[i]);
  }
  return out;
}

Csg csg_leaf(const TerminalGraph& tg, int k, NodeBudget budget, const ColorListAssignment* lists) {
  if (tg.host == nullptr) throw InputError("csg_leaf: terminal graph without host");
  if (tg.terminals != tg.vertices) throw InputError("csg_leaf: a leaf needs T = V");
  if (k < 0) throw InputError("csg_leaf: negative k");
  const Graph& g = *tg.host;
  const auto& terms = tg.terminals;
  const std::size_t m = terms.size();
  Csg out(k, terms);

  // Lexicographic backtracking over proper colorings of G[T].
  std::vector<Color> current(m, 0);
  std::vector<std::vector<std::size_t>> earlier(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g.has_edge(terms[i], terms[j])) earlier[i].push_back(j);
  auto allowed = [&](std::size_t i, Color c) {
    if (lists && !lists->allows(terms[i], c)) return false;
    return std::none_of(earlier[i].begin(), earlier[i].end(), [&](std::size_t j) { return current[j] == c; });
  };
  std::unordered_map<std::string, NodeId> index;
  if (m == 0) {
    out.add_node(current);
  } else {
    std::size_t depth = 0;
    while (true) {
      // advance position `depth` to its next allowed color
      Color c = current[depth];
      do ++c;
      while (c <= k && !allowed(depth, c));
      if (c > k) {
        current[depth] = 0;
        if (depth == 0) break;
        --depth;
        continue;
      }
      current[depth] = c;
      if (depth + 1 < m) {
        ++depth;
        continue;
      }
      charge(budget, out.node_count() + 1, "csg_leaf");
      index.emplace(key_of(current), out.add_node(current));
    }
  }
  std::vector<Color> probe(m);
  for (std::size_t x = 0; x < out.node_count(); ++x) {
    auto lab = out.label(static_cast<NodeId>(x));
    std::copy(lab.begin(), lab.end(), probe.begin());
    for (std::size_t i = 0; i < m; ++i) {
      const Color own = probe[i];
      for (int c = own + 1; c <= k; ++c) {
        probe[i] = static_cast<Color>(c);
        auto it = index.find(key_of(probe));
        if (it != index.end()) out.add_edge(static_cast<NodeId>(x), it->second);
      }
      probe[i] = own;
    }
  }
  out.finalize();
  return out;
}

Csg csg_forget(const Csg& h, Vertex v) {
  const std::size_t pos = position_of(h.terminals(), v);
  std::vector<Vertex> terms(h.terminals().begin(), h.terminals().end());
  terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(pos));

  auto same_without_pos = [&](NodeId x, NodeId y) {
    auto a = h.label(x), b = h.label(y);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != pos && a[i] != b[i]) return false;
    return true;
  };
  const std::size_t n = h.node_count();
  UnionFind uf(n);
  for (std::size_t x = 0; x < n; ++x)
    for (NodeId y : h.neighbors(static_cast<NodeId>(x)))
      if (static_cast<std::size_t>(y) > x && same_without_pos(static_cast<NodeId>(x), y))
        uf.unite(x, static_cast<std::size_t>(y));

  Csg out(h.k(), std::move(terms));
  std::vector<NodeId> image(n, -1);
  std::vector<Color> shortened;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t root = uf.find(x);
    if (image[root] == -1) {
      auto lab = h.label(static_cast<NodeId>(x));
      shortened.assign(lab.begin(), lab.end());
      shortened.erase(shortened.begin() + static_cast<std::ptrdiff_t>(pos));
      image[root] = out.add_node(shortened);
    }
    image[x] = image[root];
  }
  for (std::size_t x = 0; x < n; ++x)
    for (NodeId y : h.neighbors(static_cast<NodeId>(x)))
      if (static_cast<std::size_t>(y) > x && image[x] != image[static_cast<std::size_t>(y)])
        out.add_edge(image[x], image[static_cast<std::size_t>(y)]);
  out.finalize();
  for (NodeId m : h.marks) out.marks.push_back(image[static_cast<std::size_t>(m)]);
  return out;
}

Csg csg_introduce(const Csg& h, const TerminalGraph& tg_new, Vertex v, int k, std::span<const Color> mark_colors,
                  NodeBudget budget, const ColorListAssignment* lists) {
  if (tg_new.host == nullptr) throw InputError("csg_introduce: terminal graph without host");
  if (k != h.k()) throw InputError("csg_introduce: color count differs from the source CSG");
  const Graph& g = *tg_new.host;
  const auto& terms = tg_new.terminals;
  const std::size_t pos = position_of(terms, v);
  {
    std::vector<Vertex> rest = terms;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
    if (!std::ranges::equal(rest, h.terminals()))
      throw InputError("csg_introduce: source terminals are not the new terminals minus v");
  }
  for (Vertex w : g.neighbors(v))
    if (std::binary_search(tg_new.vertices.begin(), tg_new.vertices.end(), w) &&
        !std::binary_search(terms.begin(), terms.end(), w))
      throw InputError("csg_introduce: neighbor " + std::to_string(w) + " of introduced vertex " +
                       std::to_string(v) + " is not a terminal");
  if (!h.marks.empty() && mark_colors.size() != h.marks.size())
    throw InputError("csg_introduce: one color per marked node is required");

  // Old-label positions of v's neighbors among the terminals.
  std::vector<std::size_t> blocking;
  for (std::size_t i = 0, j = 0; i < terms.size(); ++i) {
    if (i == pos) continue;
    if (g.has_edge(v, terms[i])) blocking.push_back(j);
    ++j;
  }
  const std::size_t n = h.node_count();
  std::vector<std::vector<Color>> choices(n);
  std::size_t total = 0;
  for (std::size_t x = 0; x < n; ++x) {
    auto lab = h.label(static_cast<NodeId>(x));
    for (int c = 1; c <= k; ++c) {
      if (lists && !lists->allows(v, static_cast<Color>(c))) continue;
      bool clash = std::any_of(blocking.begin(), blocking.end(), [&](std::size_t j) { return lab[j] == c; });
      if (!clash) choices[x].push_back(static_cast<Color>(c));
    }
    total += choices[x].size();
  }
  charge(budget, total, "csg_introduce");

  Csg out(k, terms);
  std::vector<NodeId> first(n + 1, 0);
  std::vector<Color> extended(terms.size());
  for (std::size_t x = 0; x < n; ++x) {
    first[x] = static_cast<NodeId>(out.node_count());
    auto lab = h.label(static_cast<NodeId>(x));
    std::copy(lab.begin(), lab.begin() + static_cast<std::ptrdiff_t>(pos), extended.begin());
    std::copy(lab.begin() + static_cast<std::ptrdiff_t>(pos), lab.end(),
              extended.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
    for (Color c : choices[x]) {
      extended[pos] = c;
      out.add_node(extended);
    }
  }
  first[n] = static_cast<NodeId>(out.node_count());
  auto node_for = [&](std::size_t x, Color c) -> NodeId {
    const auto& cs = choices[x];
    auto it = std::lower_bound(cs.begin(), cs.end(), c);
    if (it == cs.end() || *it != c) return -1;
    return first[x] + static_cast<NodeId>(it - cs.begin());
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (NodeId a = first[x]; a < first[x + 1]; ++a)
      for (NodeId b = a + 1; b < first[x + 1]; ++b) out.add_edge(a, b);
    for (NodeId y : h.neighbors(static_cast<NodeId>(x))) {
      if (static_cast<std::size_t>(y) < x) continue;
      for (Color c : choices[x]) {
        NodeId other = node_for(static_cast<std::size_t>(y), c);
        if (other >= 0) out.add_edge(node_for(x, c), other);
      }
    }
  }
  out.finalize();
  for (std::size_t i = 0; i < h.marks.size(); ++i) {
    NodeId node = node_for(static_cast<std::size_t>(h.marks[i]), mark_colors[i]);
    if (node < 0) throw InputError("csg_introduce: tracked coloring is not proper at the introduced vertex");
    out.marks.push_back(node);
  }
  return out;
}

Csg csg_join(const Csg& h1, const Csg& h2, NodeBudget budget) {
  if (h1.k() != h2.k() || !std::ranges::equal(h1.terminals(), h2.terminals()))
    throw InputError("csg_join: CSGs have different terminal orders or color counts");
  if (h1.marks.size() != h2.marks.size()) throw InputError("csg_join: sides track different numbers of colorings");
  std::unordered_map<std::string, std::vector<NodeId>> by_label;
  for (std::size_t y = 0; y < h2.node_count(); ++y)
    by_label[key_of(h2.label(static_cast<NodeId>(y)))].push_back(static_cast<NodeId>(y));

  std::size_t total = 0;
  std::vector<const std::vector<NodeId>*> partners(h1.node_count(), nullptr);
  for (std::size_t x = 0; x < h1.node_count(); ++x) {
    auto it = by_label.find(key_of(h1.label(static_cast<NodeId>(x))));
    if (it == by_label.end()) continue;
    partners[x] = &it->second;
    total += it->second.size();
  }
  charge(budget, total, "csg_join");

  std::vector<Vertex> terms(h1.terminals().begin(), h1.terminals().end());
  Csg out(h1.k(), std::move(terms));
  std::unordered_map<std::uint64_t, NodeId> pair_id;
  pair_id.reserve(total);
  auto pack = [](NodeId x, NodeId y) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) | static_cast<std::uint32_t>(y);
  };
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(total);
  for (std::size_t x = 0; x < h1.node_count(); ++x) {
    if (!partners[x]) continue;
    for (NodeId y : *partners[x]) {
      pair_id.emplace(pack(static_cast<NodeId>(x), y), out.add_node(h1.label(static_cast<NodeId>(x))));
      pairs.emplace_back(static_cast<NodeId>(x), y);
    }
  }
  for (std::size_t id = 0; id < pairs.size(); ++id) {
    auto [x, y] = pairs[id];
    for (NodeId x2 : h1.neighbors(x)) {
      if (x2 < x) continue;
      for (NodeId y2 : h2.neighbors(y)) {
        auto it = pair_id.find(pack(x2, y2));
        if (it != pair_id.end()) out.add_edge(static_cast<NodeId>(id), it->second);
      }
    }
  }
  out.finalize();
  for (std::size_t i = 0; i < h1.marks.size(); ++i) {
    auto it = pair_id.find(pack(h1.marks[i], h2.marks[i]));
    if (it == pair_id.end()) throw InputError("csg_join: tracked nodes carry different labels");
    out.marks.push_back(it->second);
  }
  return out;
}

bool csg_reachable(const Csg& csg) {
  if (csg.marks.size() < 2) throw InputError("csg_reachable: alpha/beta marks are absent");
  auto comp = csg.components();
  return comp[static_cast<std::size_t>(csg.marks[0])] == comp[static_cast<std::size_t>(csg.marks[1])];
}

DpResult run_csg_dp(const Graph& g, const NiceTreeDecomposition& td, int k, std::span<const Coloring> tracked,
                    const DpOptions& options) {
  if (k < 0) throw InputError("run_csg_dp: negative k");
  if (auto check = validate_nice_td(td, g, false); !check)
    throw InputError("run_csg_dp: invalid nice tree decomposition: " + check.reason);
  for (const auto& c : tracked) {
    if (c.k() != k) throw InputError("run_csg_dp: tracked coloring uses a different k");
    if (!is_proper_coloring(g, c)) throw InputError("run_csg_dp: tracked coloring is not proper");
    if (options.lists && !is_list_coloring(g, c, *options.lists))
      throw InputError("run_csg_dp: tracked coloring violates the color lists");
  }
  const auto sets = subtree_vertex_sets(td);
  std::vector<std::optional<Csg>> results(td.nodes.size());
  DpResult out;
  std::vector<Color> mark_colors;
  for (int u : td.postorder()) {
    const auto& node = td.nodes[static_cast<std::size_t>(u)];
    auto take = [&](int child) {
      Csg c = std::move(*results[static_cast<std::size_t>(child)]);
      results[static_cast<std::size_t>(child)].reset();
      return c;
    };
    Csg current;
    switch (node.kind) {
      case NodeKind::Leaf: {
        current = csg_leaf(TerminalGraph{&g, node.bag, node.bag}, k, options.budget, options.lists);
        std::unordered_map<std::string, NodeId> index;
        for (std::size_t x = 0; x < current.node_count(); ++x)
          index.emplace(key_of(current.label(static_cast<NodeId>(x))), static_cast<NodeId>(x));
        for (const auto& c : tracked) {
          std::vector<Color> lab;
          for (Vertex b : node.bag) lab.push_back(c.colors()[static_cast<std::size_t>(b)]);
          current.marks.push_back(index.at(key_of(lab)));
        }
        break;
      }
      case NodeKind::Forget:
        current = csg_forget(take(node.children[0]), node.vertex);
        break;
      case NodeKind::Introduce: {
        mark_colors.clear();
        for (const auto& c : tracked) mark_colors.push_back(c.colors()[static_cast<std::size_t>(node.vertex)]);
        TerminalGraph tg{&g, sets[static_cast<std::size_t>(u)], node.bag};
        current = csg_introduce(take(node.children[0]), tg, node.vertex, k, mark_colors, options.budget,
                                options.lists);
        break;
      }
      case NodeKind::Join: {
        Csg left = take(node.children[0]);
        Csg right = take(node.children[1]);
        current = csg_join(left, right, options.budget);
        break;
      }
    }
    charge(options.budget, current.node_count(), "run_csg_dp");
    out.peak_nodes = std::max(out.peak_nodes, current.node_count());
    if (options.check_invariants && current.equal_label_edge())
      throw std::logic_error("CSG invariant violated: adjacent nodes share a label at decomposition node " +
                             std::to_string(u));
    if (options.observer) options.observer(u, current);
    results[static_cast<std::size_t>(u)] = std::move(current);
  }
  out.root = std::move(*results[static_cast<std::size_t>(td.root)]);
  return out;
}

Csg csg_over_decomposition(const Graph& g, const NiceTreeDecomposition& td, int k, const Coloring& alpha,
                           const Coloring& beta, const DpOptions& options) {
  const Coloring pair[] = {alpha, beta};
  return run_csg_dp(g, td, k, pair, options).root;
}

}  // namespace recolor
