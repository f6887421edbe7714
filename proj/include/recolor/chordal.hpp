#pragma once

#include <optional>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

/// Ordering v_1..v_n in which every vertex's later neighbors form a clique,
/// or nullopt if g is not chordal. Computed by maximum cardinality search
/// with lowest-id tie-breaking, so the result is deterministic.
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);

bool is_chordal(const Graph& g);

/// Checks the perfect-elimination property of an arbitrary ordering.
bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order);

/// A maximum clique of a chordal graph, sorted. Scans the closed later
/// neighborhoods along the elimination ordering; ties go to the earliest
/// position. Throws InputError if g is not chordal or empty.
std::vector<Vertex> max_clique_chordal(const Graph& g);

/// Proper k-coloring by reverse-elimination greedy (lowest free color), or
/// nullopt when the clique number exceeds k. Throws InputError if g is not
/// chordal.
std::optional<Coloring> greedy_chordal_coloring(const Graph& g, int k);

}  // namespace recolor
