#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

using Seed = std::uint64_t;

/// Vertices v_0..v_{p-1}; edges v_0v_3, v_iv_{i+1} and v_iv_{i+2}. Chordal,
/// 2-connected and 4-colorable. Throws InputError if p < 4.
Graph gen_interval_family(int p);

/// The coloring alpha_S of gen_interval_family(p), p = 4q+4, S a subset of
/// 1..q: v_{4j} -> 3 if j in S else 4, v_{4j+1} -> 4 if j in S else 3,
/// v_{4j+2} -> 1, v_{4j+3} -> 2.
Coloring gen_interval_coloring(int p, std::span<const int> subset);

/// 3n vertices u_i = i-1, v_i = n+i-1, w_i = 2n+i-1 (i = 1..n); edges u_iv_i,
/// and w_iw_j, w_iv_j for i != j. Throws InputError if n < 2.
Graph gen_quadratic_family(int n);

/// Random (k-1)-tree: a (k-1)-clique, then each new vertex is joined to a
/// uniformly chosen (k-1)-clique of the current graph. Requires k >= 3,
/// conn == k-2 and n >= k.
Graph gen_random_connected_chordal(int n, int k, int conn, Seed seed);

/// Like gen_random_connected_chordal, but each new vertex is joined to a
/// (k-2)-clique with probability `small_attach` (else a (k-1)-clique).
/// Still chordal, (k-2)-connected, clique number <= k, yet not every
/// k-coloring is frozen.
Graph gen_random_chordal_mixed(int n, int k, Seed seed, double small_attach = 0.5);

/// p copies of `gadget` sharing one vertex, the hub. Copy 0 keeps the gadget
/// ids; later copies number their non-hub vertices consecutively.
Graph gen_star_blowup(const Graph& gadget, Vertex hub, int p);

/// Uniformly chosen free color per vertex along the reverse elimination
/// ordering of a chordal graph with clique number <= k.
Coloring random_chordal_coloring(const Graph& g, int k, Seed seed);

/// `steps` random single-vertex recolorings applied to `start` (moves that
/// are impossible are skipped). The result is reachable from `start`.
Coloring random_recoloring_walk(const Graph& g, const Coloring& start, int steps, Seed seed);

}  // namespace recolor
