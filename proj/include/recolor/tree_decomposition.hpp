#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// An induced subgraph of a host graph together with its terminal set.
/// Both vertex lists hold host ids and are sorted. The host must outlive
/// the view.
struct TerminalGraph {
  const Graph* host = nullptr;
  std::vector<Vertex> vertices;
  std::vector<Vertex> terminals;
};

enum class NodeKind { Leaf, Forget, Introduce, Join };

const char* to_string(NodeKind kind);

struct TdNode {
  NodeKind kind = NodeKind::Leaf;
  Vertex vertex = -1;          ///< forgotten / introduced vertex
  std::vector<Vertex> bag;     ///< sorted
  std::vector<int> children;   ///< 0, 1 or 2 node indices
};

/// Rooted nice tree decomposition. Node semantics follow the terminal-graph
/// operations: a Forget(v) node has bag T and a child with bag T+v over the
/// same subgraph; an Introduce(v) node adds v (whose neighbors all lie in the
/// bag) to its child's subgraph; a Join node glues two subgraphs that meet
/// exactly in the bag.
struct NiceTreeDecomposition {
  std::vector<TdNode> nodes;
  int root = -1;

  std::size_t size() const noexcept { return nodes.size(); }
  /// Node indices with every child before its parent, root last.
  std::vector<int> postorder() const;
};

/// Max bag size minus one. Throws InputError on an empty decomposition.
int td_width(const NiceTreeDecomposition& td);

struct JoinChoice {
  std::vector<Vertex> component;  ///< vertices of G-T split off into G[T+C]
};
struct IntroduceChoice {
  Vertex vertex;
};
struct ForgetChoice {
  Vertex vertex;
};
struct LeafDone {};
using OperationChoice = std::variant<JoinChoice, IntroduceChoice, ForgetChoice, LeafDone>;

/// Picks the operation producing (G,T) from smaller chordal terminal graphs:
/// LeafDone if T = V; Join on the component of G-T holding the lowest id if
/// G-T is disconnected; Introduce of the lowest terminal without neighbors
/// outside T; otherwise Forget of the lowest non-terminal adjacent to all of T.
/// Throws InputError unless G[vertices] is chordal and T is a clique.
OperationChoice classify_next_operation(const TerminalGraph& tg);

/// Chordal nice tree decomposition of (g, root_clique): every bag is a clique
/// and the root bag is root_clique. Throws InputError if g is empty or not
/// chordal, or root_clique is not a clique.
NiceTreeDecomposition build_chordal_nice_td(const Graph& g, std::vector<Vertex> root_clique);
/// Same, rooted at max_clique_chordal(g).
NiceTreeDecomposition build_chordal_nice_td(const Graph& g);

/// Nice tree decomposition of an arbitrary graph: the graph plus a clique on
/// `root` is triangulated by minimum-degree elimination, and the chordal
/// construction is run on the result. Bags need not be cliques of g.
NiceTreeDecomposition build_nice_td(const Graph& g, std::vector<Vertex> root);
NiceTreeDecomposition build_nice_td(const Graph& g);

struct TdValidation {
  bool ok = true;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks the recursive definition node by node (see TdNode). With
/// chordal_mode, every bag must additionally be a clique of g.
TdValidation validate_nice_td(const NiceTreeDecomposition& td, const Graph& g, bool chordal_mode);

/// Inductive size bound 2n - t + (w+2) max(0, n-t-1); never above (w+4)n.
long long td_size_budget(long long n, long long t, long long w);

/// Union of the bags below and at each node: the vertex set of the node's
/// terminal graph.
std::vector<std::vector<Vertex>> subtree_vertex_sets(const NiceTreeDecomposition& td);

}  // namespace recolor
