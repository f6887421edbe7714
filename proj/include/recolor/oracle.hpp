#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/csg.hpp"
#include "recolor/graph.hpp"

namespace recolor {

/// Explicit k-color graph: every proper k-coloring of an n-vertex graph, in
/// lexicographic order, with colorings differing on one vertex adjacent.
struct SolutionGraph {
  int k = 0;
  int n = 0;
  std::vector<Color> flat;                    ///< coloring i is flat[i*n, (i+1)*n)
  std::vector<std::vector<int>> adjacency;    ///< sorted

  std::size_t size() const noexcept { return adjacency.size(); }
  std::span<const Color> coloring(std::size_t i) const {
    return {flat.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
  }
  /// Index of a coloring given as a color sequence, if present.
  std::optional<int> find(std::span<const Color> colors) const;
  std::optional<int> find(const Coloring& c) const { return find(c.colors()); }
};

struct OracleBudget {
  std::size_t max_colorings = 2'000'000;
};

/// Enumerates C_k(g) (or C_L(g) with lists) by backtracking; chordal graphs
/// are colored along the reverse elimination order. Throws BudgetExceeded
/// when more than the budgeted number of colorings exist.
SolutionGraph enumerate_solution_graph(const Graph& g, int k, OracleBudget budget = {},
                                       const ColorListAssignment* lists = nullptr);

/// Breadth-first search from alpha over single-vertex recolorings, without
/// materializing C_k(g). Throws InputError if either coloring is improper.
bool oracle_reachable(const Graph& g, int k, const Coloring& alpha, const Coloring& beta,
                      OracleBudget budget = {});

/// Coloring index -> part id; parts are numbered by their lowest member.
struct Partition {
  std::vector<int> part_of;
  int count = 0;
};

/// Label components: connected components of the subgraph of sg keeping only
/// edges whose endpoints agree on the terminals. With no terminals these are
/// the components of C_k(g).
Partition label_components(const SolutionGraph& sg, std::span<const Vertex> terminals);

/// One node per part (node i = part i), labeled by the restriction to the
/// terminals, adjacent iff some pair of colorings across the parts is.
Csg contract_solution_graph(const SolutionGraph& sg, std::span<const Vertex> terminals,
                            const Partition& parts);
Csg contract_solution_graph(const SolutionGraph& sg, std::span<const Vertex> terminals);

struct CertificateCheck {
  bool ok = true;
  char property = 0;   ///< 'a'..'e' of the first violated property
  std::string detail;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks that `parts` (coloring -> csg node) certifies `csg` as the CSG of
/// (G, terminals):
///   a  every node owns a non-empty part and every coloring is assigned
///   b  each coloring restricts to its node's label
///   c  adjacent nodes carry different labels
///   d  each part induces a connected subgraph of C_k(G)
///   e  nodes are adjacent iff some colorings across their parts are
CertificateCheck verify_csg_certificate(const Csg& csg, const Partition& parts, const SolutionGraph& sg,
                                        std::span<const Vertex> terminals);

struct IsomorphismLimits {
  std::size_t max_nodes = 200'000;
  std::size_t max_steps = 50'000'000;
};

/// Label-preserving isomorphism h1 -> h2 (mapping[x] = image of x), found by
/// color refinement seeded with the labels followed by backtracking.
/// Throws BudgetExceeded past the limits.
std::optional<std::vector<NodeId>> find_labeled_isomorphism(const Csg& h1, const Csg& h2,
                                                            IsomorphismLimits limits = {});
bool labeled_isomorphic(const Csg& h1, const Csg& h2, IsomorphismLimits limits = {});

}  // namespace recolor
