#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recolor/errors.hpp"

namespace recolor {

using Vertex = std::int32_t;
using Color = std::uint16_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on the dense vertex ids 0..n-1.
///
/// Immutable after construction. Adjacency is kept both as sorted neighbor
/// lists and, for graphs up to kBitsetLimit vertices, as one bitset row per
/// vertex so that `has_edge` is a single word probe.
class Graph {
 public:
  static constexpr int kBitsetLimit = 4096;

  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// True iff every pair of distinct vertices in `vertices` is adjacent.
  bool is_clique(std::span<const Vertex> vertices) const;

  /// Subgraph induced by `vertices` (any order, no duplicates); vertex i of
  /// the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  const std::map<Vertex, std::string>& names() const noexcept { return names_; }
  void set_name(Vertex v, std::string name);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> bits_;  // row-major, words_per_row_ words per vertex
  std::size_t words_per_row_ = 0;
  std::size_t edge_count_ = 0;
  std::map<Vertex, std::string> names_;
};

/// Connected components of g - removed. Each component is sorted;
/// components are ordered by their lowest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      std::span<const Vertex> removed = {});

bool is_connected(const Graph& g);

}  // namespace recolor
