#include "recolor/essential.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

#include "recolor/chordal.hpp"
#include "recolor/connectivity.hpp"
#include "recolor/oracle.hpp"

namespace recolor {

namespace {

std::size_t position_in(std::span<const Vertex> bag, Vertex v) {
  auto it = std::find(bag.begin(), bag.end(), v);
  if (it == bag.end()) throw InputError("vertex " + std::to_string(v) + " is not in the bag");
  return static_cast<std::size_t>(it - bag.begin());
}

std::vector<Color> restricted(const Coloring& c, std::span<const Vertex> bag) {
  std::vector<Color> out;
  out.reserve(bag.size());
  for (Vertex v : bag) out.push_back(c.at(v));
  return out;
}

// Bitmask of the colors a label uses; bit c stands for color c.
std::uint64_t used_mask(std::span<const Color> label) {
  std::uint64_t m = 0;
  for (Color c : label) m |= std::uint64_t{1} << c;
  return m;
}

long weight_of(const EssentialInfo& info, int k) {
  if (auto* fp = std::get_if<ForestPath>(&info)) return path_weight(fp->labels, k);
  return 0;
}

std::size_t length_of(const EssentialInfo& info) {
  if (auto* fp = std::get_if<ForestPath>(&info)) return fp->labels.empty() ? 0 : fp->labels.size() - 1;
  return 0;
}

}  // namespace

const char* state_name(const EssentialInfo& info) {
  switch (info.index()) {
    case 0: return "separated";
    case 1: return "color-complete";
    default: return "forest-path";
  }
}

long path_weight(std::span<const std::vector<Color>> labels, int k) {
  if (k > 62) throw InputError("path_weight: k above 62 is not supported");
  long total = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i + 1 < labels.size()) {
      const auto& a = labels[i];
      const auto& b = labels[i + 1];
      if (a.size() != b.size()) throw InputError("path_weight: labels of different length");
      std::size_t diff = 0;
      for (std::size_t j = 0; j < a.size(); ++j) diff += a[j] != b[j];
      if (diff != 1) throw InputError("path_weight: consecutive labels must differ on exactly one terminal");
    }
    std::uint64_t around = 0;
    if (i > 0) around |= used_mask(labels[i - 1]);
    if (i + 1 < labels.size()) around |= used_mask(labels[i + 1]);
    total += std::popcount(around & ~used_mask(labels[i]));
  }
  return total;
}

bool is_color_complete(const Csg& csg, int m, int k) {
  if (m < 0 || k < 0 || m > k || csg.arity() != static_cast<std::size_t>(m)) return false;
  std::size_t expected = 1;
  for (int i = 0; i < m; ++i) expected *= static_cast<std::size_t>(k - i);
  if (csg.node_count() != expected) return false;
  std::set<std::vector<Color>> seen;
  for (std::size_t x = 0; x < csg.node_count(); ++x) {
    auto lab = csg.label(static_cast<NodeId>(x));
    std::vector<Color> v(lab.begin(), lab.end());
    for (Color c : v)
      if (c < 1 || c > k) return false;
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!seen.insert(std::move(v)).second) return false;
    for (NodeId y : csg.neighbors(static_cast<NodeId>(x))) {
      auto other = csg.label(y);
      std::size_t diff = 0;
      for (std::size_t j = 0; j < lab.size(); ++j) diff += lab[j] != other[j];
      if (diff != 1) return false;
    }
    if (csg.neighbors(static_cast<NodeId>(x)).size() != static_cast<std::size_t>(m * (k - m))) return false;
  }
  return true;
}

bool satisfies_inp_forest(const Csg& csg) {
  auto comp = csg.components();
  const std::size_t parts = comp.empty() ? 0 : static_cast<std::size_t>(*std::max_element(comp.begin(), comp.end())) + 1;
  if (csg.edge_count() + parts != csg.node_count()) return false;
  for (std::size_t x = 0; x < csg.node_count(); ++x) {
    std::set<std::vector<Color>> labels;
    for (NodeId y : csg.neighbors(static_cast<NodeId>(x))) {
      auto lab = csg.label(y);
      if (!labels.emplace(lab.begin(), lab.end()).second) return false;
    }
  }
  return true;
}

EssentialInfo essential_leaf(std::span<const Vertex> bag, int k, const Coloring& alpha, const Coloring& beta) {
  const auto m = static_cast<int>(bag.size());
  if (m > k) throw PreconditionError("k-colorable", "essential_leaf: clique of size " + std::to_string(m) +
                                                         " exceeds k = " + std::to_string(k));
  if (m < k) return ColorComplete{m};
  auto a = restricted(alpha, bag);
  if (a != restricted(beta, bag)) return Separated{};
  return ForestPath{{std::move(a)}};
}

EssentialInfo essential_forget(const EssentialInfo& info, Vertex v, std::span<const Vertex> bag, int k) {
  const std::size_t pos = position_in(bag, v);
  if (static_cast<int>(bag.size()) < k - 1)
    throw PreconditionError("(k-2)-connected", "essential_forget: fewer than k-1 terminals before forgetting");
  if (std::holds_alternative<Separated>(info)) return Separated{};
  if (auto* cc = std::get_if<ColorComplete>(&info)) {
    if (cc->m != static_cast<int>(bag.size())) throw InputError("essential_forget: state does not match the bag");
    return ColorComplete{cc->m - 1};
  }
  const auto& labels = std::get<ForestPath>(info).labels;
  ForestPath out;
  for (const auto& lab : labels) {
    if (lab.size() != bag.size()) throw InputError("essential_forget: label does not match the bag");
    std::vector<Color> shorter = lab;
    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(pos));
    if (out.labels.empty() || out.labels.back() != shorter) out.labels.push_back(std::move(shorter));
  }
  return out;
}

EssentialInfo essential_introduce(const EssentialInfo& info, Vertex v, std::span<const Vertex> new_bag, int k,
                                  const Coloring& alpha, const Coloring& beta) {
  const std::size_t pos = position_in(new_bag, v);
  const auto size = static_cast<int>(new_bag.size());
  if (size != k && size != k - 1)
    throw PreconditionError("(k-2)-connected",
                            "essential_introduce: the new bag must hold k-1 or k terminals, got " + std::to_string(size));
  if (std::holds_alternative<Separated>(info)) return Separated{};
  auto a = restricted(alpha, new_bag);
  if (size == k) {
    bool single = std::holds_alternative<ColorComplete>(info) || std::get<ForestPath>(info).labels.size() == 1;
    if (single && a == restricted(beta, new_bag)) return ForestPath{{std::move(a)}};
    return Separated{};
  }
  if (auto* cc = std::get_if<ColorComplete>(&info)) {
    if (cc->m != size - 1) throw InputError("essential_introduce: state does not match the bag");
    return ColorComplete{size};
  }
  const auto& path = std::get<ForestPath>(info).labels;
  if (path.empty()) throw InputError("essential_introduce: empty path");
  // Caterpillar: label i spawns nodes 2i and 2i+1, one per free color; the
  // free color sets of consecutive labels share exactly one color.
  const std::size_t p = path.size();
  std::vector<std::array<Color, 2>> free(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (path[i].size() + 1 != new_bag.size()) throw InputError("essential_introduce: label does not match the bag");
    std::uint64_t used = used_mask(path[i]);
    int found = 0;
    for (int c = 1; c <= k; ++c)
      if (!(used >> c & 1)) {
        if (found == 2) throw InputError("essential_introduce: label is not injective");
        free[i][static_cast<std::size_t>(found++)] = static_cast<Color>(c);
      }
    if (found != 2) throw InputError("essential_introduce: label is not injective");
  }
  auto node_of = [&](std::size_t i, Color c) -> long {
    for (std::size_t j = 0; j < 2; ++j)
      if (free[i][j] == c) return static_cast<long>(2 * i + j);
    return -1;
  };
  const long start = node_of(0, alpha.at(v));
  const long goal = node_of(p - 1, beta.at(v));
  if (start < 0 || goal < 0) throw InputError("essential_introduce: alpha/beta disagree with the path endpoints");
  std::vector<long> parent(2 * p, -2);
  parent[static_cast<std::size_t>(start)] = -1;
  std::deque<long> queue{start};
  while (!queue.empty() && parent[static_cast<std::size_t>(goal)] == -2) {
    long x = queue.front();
    queue.pop_front();
    auto i = static_cast<std::size_t>(x / 2);
    Color c = free[i][static_cast<std::size_t>(x % 2)];
    auto visit = [&](long y) {
      if (y >= 0 && parent[static_cast<std::size_t>(y)] == -2) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    };
    visit(x ^ 1);
    if (i > 0) visit(node_of(i - 1, c));
    if (i + 1 < p) visit(node_of(i + 1, c));
  }
  if (parent[static_cast<std::size_t>(goal)] == -2)
    throw std::logic_error("essential_introduce: caterpillar does not connect the path endpoints");
  std::vector<long> nodes;
  for (long x = goal; x != -1; x = parent[static_cast<std::size_t>(x)]) nodes.push_back(x);
  std::reverse(nodes.begin(), nodes.end());
  ForestPath out;
  for (long x : nodes) {
    auto i = static_cast<std::size_t>(x / 2);
    std::vector<Color> lab = path[i];
    lab.insert(lab.begin() + static_cast<std::ptrdiff_t>(pos), free[i][static_cast<std::size_t>(x % 2)]);
    out.labels.push_back(std::move(lab));
  }
  return out;
}

EssentialInfo essential_join(const EssentialInfo& a, const EssentialInfo& b) {
  if (std::holds_alternative<Separated>(a) || std::holds_alternative<Separated>(b)) return Separated{};
  auto* ca = std::get_if<ColorComplete>(&a);
  auto* cb = std::get_if<ColorComplete>(&b);
  if (ca && cb) {
    if (ca->m != cb->m) throw InputError("essential_join: sides have different terminal counts");
    return *ca;
  }
  if (ca) return b;
  if (cb) return a;
  const auto& pa = std::get<ForestPath>(a);
  if (pa == std::get<ForestPath>(b)) return pa;
  return Separated{};
}

std::optional<std::vector<std::vector<Color>>> csg_alpha_beta_path(const Csg& csg) {
  if (csg.marks.size() < 2) throw InputError("csg_alpha_beta_path: alpha/beta marks are absent");
  const NodeId s = csg.marks[0], t = csg.marks[1];
  std::vector<NodeId> parent(csg.node_count(), -2);
  parent[static_cast<std::size_t>(s)] = -1;
  std::deque<NodeId> queue{s};
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    if (x == t) break;
    for (NodeId y : csg.neighbors(x))
      if (parent[static_cast<std::size_t>(y)] == -2) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
  }
  if (parent[static_cast<std::size_t>(t)] == -2) return std::nullopt;
  std::vector<std::vector<Color>> labels;
  for (NodeId x = t; x != -1; x = parent[static_cast<std::size_t>(x)]) {
    auto lab = csg.label(x);
    labels.emplace_back(lab.begin(), lab.end());
  }
  std::reverse(labels.begin(), labels.end());
  return labels;
}

FastResult fast_reachability(const Graph& g, int k, const Coloring& alpha, const Coloring& beta,
                             const FastOptions& options) {
  if (k < 3) throw PreconditionError("k>=3", "fast_reachability: needs k >= 3");
  if (k > 62) throw InputError("fast_reachability: k above 62 is not supported");
  const int n = g.vertex_count();
  auto check_coloring = [&](const Coloring& c, const char* name) {
    if (c.k() != k || !c.is_total_over(n) || !is_proper_coloring(g, c))
      throw PreconditionError(name, std::string("fast_reachability: ") + name + " failed");
  };
  check_coloring(alpha, "proper-alpha");
  check_coloring(beta, "proper-beta");
  if (!is_chordal(g)) throw PreconditionError("chordal", "fast_reachability: graph is not chordal");
  FastResult result;
  if (n <= k) {
    result.oracle_bypass = true;
    result.answer = oracle_reachable(g, k, alpha, beta);
    result.root_state = result.answer ? EssentialInfo{ColorComplete{n}} : EssentialInfo{Separated{}};
    return result;
  }
  if (max_clique_chordal(g).size() > static_cast<std::size_t>(k))
    throw PreconditionError("k-colorable", "fast_reachability: clique number exceeds k");
  if (!is_l_connected(g, k - 2))
    throw PreconditionError("(k-2)-connected", "fast_reachability: graph is not (k-2)-connected");
  std::vector<Vertex> root = options.root_clique ? *options.root_clique : max_clique_chordal(g);
  std::sort(root.begin(), root.end());
  if (static_cast<int>(root.size()) < k - 2 || !g.is_clique(root))
    throw PreconditionError("root-clique", "fast_reachability: root must be a clique of at least k-2 vertices");
  const auto td = build_chordal_nice_td(g, root);
  result.td_node_count = td.size();
  result.root_terminals = td.nodes[static_cast<std::size_t>(td.root)].bag;

  std::vector<std::optional<EssentialInfo>> state(td.size());
  std::vector<long> weight(td.size(), 0);
  for (int u : td.postorder()) {
    const auto& node = td.nodes[static_cast<std::size_t>(u)];
    EssentialInfo info;
    long reference = 0;
    auto child = [&](std::size_t i) -> EssentialInfo& { return *state[static_cast<std::size_t>(node.children[i])]; };
    auto child_weight = [&](std::size_t i) { return weight[static_cast<std::size_t>(node.children[i])]; };
    switch (node.kind) {
      case NodeKind::Leaf:
        info = essential_leaf(node.bag, k, alpha, beta);
        break;
      case NodeKind::Forget: {
        const auto& below = td.nodes[static_cast<std::size_t>(node.children[0])].bag;
        info = essential_forget(child(0), node.vertex, below, k);
        reference = child_weight(0);
        break;
      }
      case NodeKind::Introduce:
        info = essential_introduce(child(0), node.vertex, node.bag, k, alpha, beta);
        reference = child_weight(0);
        break;
      case NodeKind::Join: {
        info = essential_join(child(0), child(1));
        bool first_cc = std::holds_alternative<ColorComplete>(child(0));
        reference = first_cc ? child_weight(1) : child_weight(0);
        break;
      }
    }
    for (int c : node.children) state[static_cast<std::size_t>(c)].reset();
    const long w = weight_of(info, k);
    weight[static_cast<std::size_t>(u)] = w;
    result.max_weight = std::max(result.max_weight, w);
    result.max_path_length = std::max(result.max_path_length, length_of(info));
    if (options.record_steps)
      result.steps.push_back(FastStep{u, node.kind, info, length_of(info), w, w - reference});
    const bool separated = std::holds_alternative<Separated>(info);
    state[static_cast<std::size_t>(u)] = std::move(info);
    if (separated) {
      result.early_stop = u != td.root;
      result.root_state = Separated{};
      result.answer = false;
      return result;
    }
  }
  result.root_state = *state[static_cast<std::size_t>(td.root)];
  result.answer = true;
  return result;
}

}  // namespace recolor
