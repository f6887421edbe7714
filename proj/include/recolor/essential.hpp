#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/csg.hpp"
#include "recolor/graph.hpp"
#include "recolor/tree_decomposition.hpp"

namespace recolor {

/// Compressed DP state for (k-2)-connected chordal instances.
struct Separated {
  friend bool operator==(const Separated&, const Separated&) = default;
};
/// The CSG is the (m,k)-color-complete graph (never materialized).
struct ColorComplete {
  int m = 0;
  friend bool operator==(const ColorComplete&, const ColorComplete&) = default;
};
/// The CSG is a forest; `labels` is its unique alpha-beta path, alpha end first.
struct ForestPath {
  std::vector<std::vector<Color>> labels;
  friend bool operator==(const ForestPath&, const ForestPath&) = default;
};
using EssentialInfo = std::variant<Separated, ColorComplete, ForestPath>;

/// "separated", "color-complete" or "forest-path".
const char* state_name(const EssentialInfo& info);

/// Sum over path positions of |(U(prev) u U(next)) \ U(own)|, U being the
/// set of colors a label uses. Throws InputError unless consecutive labels
/// differ on exactly one terminal.
long path_weight(std::span<const std::vector<Color>> labels, int k);

/// Every injective coloring of the m terminals appears exactly once and
/// nodes are adjacent iff their labels differ on one terminal.
bool is_color_complete(const Csg& csg, int m, int k);
/// Acyclic, and no node has two neighbors with the same label.
bool satisfies_inp_forest(const Csg& csg);

/// Leaf whose bag T is a clique: ColorComplete below k terminals; at k
/// terminals the colorings are frozen.
EssentialInfo essential_leaf(std::span<const Vertex> bag, int k, const Coloring& alpha, const Coloring& beta);

/// `bag` is the terminal set before v is forgotten; needs |bag| >= k-1.
EssentialInfo essential_forget(const EssentialInfo& info, Vertex v, std::span<const Vertex> bag, int k);

/// `new_bag` contains v, which must be adjacent to all other terminals;
/// needs |new_bag| in {k-1, k}.
EssentialInfo essential_introduce(const EssentialInfo& info, Vertex v, std::span<const Vertex> new_bag, int k,
                                  const Coloring& alpha, const Coloring& beta);

EssentialInfo essential_join(const EssentialInfo& a, const EssentialInfo& b);

struct FastStep {
  int node = -1;
  NodeKind kind = NodeKind::Leaf;
  EssentialInfo info;
  std::size_t path_length = 0;  ///< edges on the path; 0 unless forest-path
  long weight = 0;
  long delta = 0;               ///< weight minus the weight of the child it derives from
};

struct FastOptions {
  /// Root bag; defaults to max_clique_chordal.
  std::optional<std::vector<Vertex>> root_clique;
  bool record_steps = false;
};

struct FastResult {
  bool answer = false;
  /// Last computed state (Separated on early stop). On oracle bypass it is
  /// ColorComplete{n} for YES and Separated for NO.
  EssentialInfo root_state;
  std::vector<Vertex> root_terminals;
  long max_weight = 0;
  std::size_t max_path_length = 0;
  std::size_t td_node_count = 0;
  bool early_stop = false;
  bool oracle_bypass = false;            ///< answered by the oracle because n <= k
  std::vector<FastStep> steps;           ///< filled with record_steps
};

/// Polynomial reachability for k-colorable (k-2)-connected chordal graphs.
/// Throws PreconditionError naming the failed predicate: "k>=3",
/// "proper-alpha", "proper-beta", "chordal", "k-colorable",
/// "(k-2)-connected" or "root-clique".
FastResult fast_reachability(const Graph& g, int k, const Coloring& alpha, const Coloring& beta,
                             const FastOptions& options = {});

/// Labels of the unique alpha-beta path in a forest CSG with marks, or
/// nullopt if the marks lie in different components.
std::optional<std::vector<std::vector<Color>>> csg_alpha_beta_path(const Csg& csg);

}  // namespace recolor
