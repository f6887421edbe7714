#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/tree_decomposition.hpp"

namespace recolor {

using NodeId = std::int32_t;

/// Contracted solution graph: one node per label component of the k-color
/// graph of some terminal graph (G,T). Node labels are colorings of G[T],
/// stored as color sequences in terminal order.
///
/// `marks` holds the nodes of tracked colorings, all chosen with respect to
/// one certificate; by convention marks[0] is the alpha-node and marks[1] the
/// beta-node.
class Csg {
 public:
  Csg() = default;
  Csg(int k, std::vector<Vertex> terminals);

  int k() const noexcept { return k_; }
  std::span<const Vertex> terminals() const noexcept { return terminals_; }
  std::size_t arity() const noexcept { return terminals_.size(); }
  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;

  std::span<const Color> label(NodeId x) const {
    return {labels_.data() + static_cast<std::size_t>(x) * arity(), arity()};
  }
  std::span<const NodeId> neighbors(NodeId x) const { return adjacency_[static_cast<std::size_t>(x)]; }
  bool has_edge(NodeId x, NodeId y) const;

  NodeId add_node(std::span<const Color> label);
  /// Adds x-y; duplicates are removed by finalize().
  void add_edge(NodeId x, NodeId y);
  /// Sorts and deduplicates adjacency lists.
  void finalize();

  std::vector<NodeId> marks;
  std::optional<NodeId> alpha() const { return marks.size() > 0 ? std::optional(marks[0]) : std::nullopt; }
  std::optional<NodeId> beta() const { return marks.size() > 1 ? std::optional(marks[1]) : std::nullopt; }

  /// Connected component id per node, numbered by lowest member.
  std::vector<int> components() const;

  /// First pair of adjacent nodes sharing a label, if any.
  std::optional<std::pair<NodeId, NodeId>> equal_label_edge() const;

 private:
  int k_ = 0;
  std::vector<Vertex> terminals_;
  std::vector<Color> labels_;
  std::vector<std::vector<NodeId>> adjacency_;
};

/// Compact label text: the color sequence, digits run together when k <= 9
/// ("142") and comma separated otherwise.
std::string label_text(std::span<const Color> label, int k);

struct NodeBudget {
  std::size_t max_nodes = 1'000'000;
};

/// CSG of a leaf (G[T], T): the k-color graph of G[T] itself, one node per
/// proper coloring (lexicographic order), colorings differing on one vertex
/// adjacent. With lists, only list colorings are kept.
Csg csg_leaf(const TerminalGraph& tg, int k, NodeBudget budget = {},
             const ColorListAssignment* lists = nullptr);

/// Drops v from every label, then contracts each connected set of nodes
/// sharing the shortened label into one node. Marks follow the contraction.
Csg csg_forget(const Csg& h, Vertex v);

/// Extends every node x by each color c for v that keeps the label proper on
/// G[T]; x_c and y_d are adjacent iff x = y, or xy is an edge and c = d.
/// `tg_new` is the terminal graph after introducing v. `mark_colors[i]` is
/// the color the i-th tracked coloring gives v.
Csg csg_introduce(const Csg& h, const TerminalGraph& tg_new, Vertex v, int k,
                  std::span<const Color> mark_colors = {}, NodeBudget budget = {},
                  const ColorListAssignment* lists = nullptr);

/// Pairs (x, y) with equal labels; (x,y)-(x',y') adjacent iff xx' and yy'
/// are both edges. Marks are paired index-wise.
Csg csg_join(const Csg& h1, const Csg& h2, NodeBudget budget = {});

/// True iff the alpha- and beta-nodes lie in one component. Throws
/// InputError if the marks are absent.
bool csg_reachable(const Csg& csg);

struct DpOptions {
  NodeBudget budget;
  const ColorListAssignment* lists = nullptr;
  /// Called with (decomposition node, its CSG) after every step.
  std::function<void(int, const Csg&)> observer;
  /// Assert after every step that adjacent nodes carry distinct labels.
  bool check_invariants = true;
};

struct DpResult {
  Csg root;
  std::size_t peak_nodes = 0;
};

/// Bottom-up evaluation of the leaf/forget/introduce/join rules over `td`.
/// Every tracked coloring must be a proper (list) coloring of g; its node is
/// recorded in the result's marks in the same order. Throws BudgetExceeded
/// when any intermediate CSG would exceed the budget.
DpResult run_csg_dp(const Graph& g, const NiceTreeDecomposition& td, int k,
                    std::span<const Coloring> tracked, const DpOptions& options = {});

/// Root CSG with the alpha- and beta-nodes marked.
Csg csg_over_decomposition(const Graph& g, const NiceTreeDecomposition& td, int k, const Coloring& alpha,
                           const Coloring& beta, const DpOptions& options = {});

}  // namespace recolor
