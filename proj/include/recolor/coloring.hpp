#pragma once

#include <span>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// Assignment of colors 1..k to an ordered vertex set (the domain).
///
/// The common case is a total coloring of a graph, whose domain is 0..n-1;
/// restrictions carry an explicit, strictly increasing domain.
class Coloring {
 public:
  Coloring() = default;
  /// Total coloring over 0..colors.size()-1.
  Coloring(int k, std::vector<Color> colors);
  Coloring(int k, std::vector<Vertex> domain, std::vector<Color> colors);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return colors_.size(); }
  std::span<const Vertex> domain() const noexcept { return domain_; }
  std::span<const Color> colors() const noexcept { return colors_; }

  /// True iff the domain is exactly 0..n-1.
  bool is_total_over(int n) const noexcept;
  bool covers(Vertex v) const;
  /// Color of v; throws InputError if v is outside the domain.
  Color at(Vertex v) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int k_ = 0;
  std::vector<Vertex> domain_;
  std::vector<Color> colors_;
};

/// Per-vertex color lists L(v), each a non-empty subset of 1..k.
class ColorListAssignment {
 public:
  ColorListAssignment() = default;
  ColorListAssignment(int k, std::vector<std::vector<Color>> lists);
  /// Every vertex of an n-vertex graph gets the full list 1..k.
  static ColorListAssignment full(int n, int k);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return lists_.size(); }
  std::span<const Color> list(Vertex v) const { return lists_.at(static_cast<std::size_t>(v)); }
  bool allows(Vertex v, Color c) const;

 private:
  int k_ = 0;
  std::vector<std::vector<Color>> lists_;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);
/// True iff c is proper and every color lies in its vertex's list.
bool is_list_coloring(const Graph& g, const Coloring& c, const ColorListAssignment& lists);

bool colorings_adjacent(const Coloring& a, const Coloring& b);

/// c restricted to the vertex set s (any order); the result's domain is s
/// sorted.
Coloring restrict_coloring(const Coloring& c, std::span<const Vertex> s);

}  // namespace recolor
