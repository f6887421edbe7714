#pragma once

#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// True iff g has at least l+1 vertices and no vertex cut of size < l.
/// Uses unit-capacity vertex max-flow between a small set of sources and
/// every non-adjacent vertex, stopping each flow once it reaches l.
bool is_l_connected(const Graph& g, int l);

/// Result of repeatedly deleting vertices of degree <= k-2.
struct LowDegreeReduction {
  Graph graph;                   ///< remaining graph, densely relabeled
  std::vector<Vertex> removed;   ///< original ids in deletion order
  std::vector<Vertex> kept;      ///< kept[i] = original id of vertex i of `graph`
};

/// Deletes the lowest-id vertex of degree <= k-2 until none remains.
/// Reachability between any two k-colorings is unchanged by each deletion.
LowDegreeReduction reduce_low_degree(const Graph& g, int k);

}  // namespace recolor
