#include "recolor/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace recolor {

namespace {

void check_colors(int k, std::span<const Color> colors) {
  if (k < 0) throw InputError("number of colors must be non-negative");
  for (Color c : colors)
    if (c < 1 || c > k)
      throw InputError("color " + std::to_string(c) + " outside 1.." + std::to_string(k));
}

}  // namespace

Coloring::Coloring(int k, std::vector<Color> colors) : k_(k), colors_(std::move(colors)) {
  check_colors(k_, colors_);
  domain_.resize(colors_.size());
  std::iota(domain_.begin(), domain_.end(), Vertex{0});
}

Coloring::Coloring(int k, std::vector<Vertex> domain, std::vector<Color> colors)
    : k_(k), domain_(std::move(domain)), colors_(std::move(colors)) {
  if (domain_.size() != colors_.size()) throw InputError("coloring domain/color size mismatch");
  for (std::size_t i = 1; i < domain_.size(); ++i)
    if (domain_[i - 1] >= domain_[i]) throw InputError("coloring domain must be strictly increasing");
  if (!domain_.empty() && domain_.front() < 0) throw InputError("negative vertex in coloring domain");
  check_colors(k_, colors_);
}

bool Coloring::is_total_over(int n) const noexcept {
  if (domain_.size() != static_cast<std::size_t>(n)) return false;
  // Strictly increasing non-negative ids of length n starting at 0 are exactly 0..n-1.
  return n == 0 || (domain_.front() == 0 && domain_.back() == n - 1);
}

bool Coloring::covers(Vertex v) const { return std::binary_search(domain_.begin(), domain_.end(), v); }

Color Coloring::at(Vertex v) const {
  if (v >= 0 && static_cast<std::size_t>(v) < domain_.size() && domain_[static_cast<std::size_t>(v)] == v)
    return colors_[static_cast<std::size_t>(v)];
  auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
  if (it == domain_.end() || *it != v)
    throw InputError("vertex " + std::to_string(v) + " not in coloring domain");
  return colors_[static_cast<std::size_t>(it - domain_.begin())];
}

ColorListAssignment::ColorListAssignment(int k, std::vector<std::vector<Color>> lists)
    : k_(k), lists_(std::move(lists)) {
  for (auto& list : lists_) {
    if (list.empty()) throw InputError("color lists must be non-empty");
    check_colors(k_, list);
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

ColorListAssignment ColorListAssignment::full(int n, int k) {
  std::vector<Color> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), Color{1});
  return ColorListAssignment(k, std::vector<std::vector<Color>>(static_cast<std::size_t>(n), all));
}

bool ColorListAssignment::allows(Vertex v, Color c) const {
  auto l = list(v);
  return std::binary_search(l.begin(), l.end(), c);
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (!c.is_total_over(g.vertex_count()))
    throw InputError("coloring is not total over the graph's vertex set");
  auto colors = c.colors();
  for (auto [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  return true;
}

bool is_list_coloring(const Graph& g, const Coloring& c, const ColorListAssignment& lists) {
  if (!is_proper_coloring(g, c)) return false;
  if (lists.size() != static_cast<std::size_t>(g.vertex_count()))
    throw InputError("color lists do not cover the graph");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!lists.allows(v, c.colors()[static_cast<std::size_t>(v)])) return false;
  return true;
}

bool colorings_adjacent(const Coloring& a, const Coloring& b) {
  if (a.k() != b.k() || !std::ranges::equal(a.domain(), b.domain()))
    throw InputError("colorings have different domains or color counts");
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.colors()[i] != b.colors()[i] && ++diff > 1) return false;
  return diff == 1;
}

Coloring restrict_coloring(const Coloring& c, std::span<const Vertex> s) {
  std::vector<Vertex> domain(s.begin(), s.end());
  std::sort(domain.begin(), domain.end());
  if (std::adjacent_find(domain.begin(), domain.end()) != domain.end())
    throw InputError("restrict_coloring: duplicate vertex in target set");
  std::vector<Color> colors;
  colors.reserve(domain.size());
  for (Vertex v : domain) {
    if (!c.covers(v)) throw InputError("restrict_coloring: target set is not a subset of the domain");
    colors.push_back(c.at(v));
  }
  return Coloring(c.k(), std::move(domain), std::move(colors));
}

}  // namespace recolor
