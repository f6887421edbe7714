#include "recolor/graph.hpp"

#include <algorithm>
#include <deque>

namespace recolor {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw InputError("vertex count must be non-negative");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  if (vertex_count <= kBitsetLimit) {
    words_per_row_ = (static_cast<std::size_t>(vertex_count) + 63) / 64;
    bits_.assign(words_per_row_ * static_cast<std::size_t>(vertex_count), 0);
  }
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v))
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw InputError("duplicate edge in edge list");
  }
  edge_count_ = edges.size();
  if (words_per_row_ > 0) {
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
      for (Vertex v : adjacency_[u])
        bits_[u * words_per_row_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  if (words_per_row_ > 0)
    return (bits_[static_cast<std::size_t>(u) * words_per_row_ + static_cast<std::size_t>(v) / 64] >>
            (v % 64)) & 1U;
  const auto& row = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(std::span<const Vertex> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!has_edge(vertices[i], vertices[j])) return false;
  return true;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> index(adjacency_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (!contains(v)) throw InputError("induced: vertex " + std::to_string(v) + " out of range");
    if (index[static_cast<std::size_t>(v)] != -1) throw InputError("induced: duplicate vertex");
    index[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : neighbors(vertices[i])) {
      Vertex j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) sub.emplace_back(static_cast<Vertex>(i), j);
    }
  Graph out(static_cast<int>(vertices.size()), sub);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto it = names_.find(vertices[i]);
    if (it != names_.end()) out.names_[static_cast<Vertex>(i)] = it->second;
  }
  return out;
}

void Graph::set_name(Vertex v, std::string name) {
  if (!contains(v)) throw InputError("set_name: vertex out of range");
  names_[v] = std::move(name);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      std::span<const Vertex> removed) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> seen(n, 0);
  for (Vertex v : removed)
    if (g.contains(v)) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<Vertex>> out;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    seen[static_cast<std::size_t>(s)] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace recolor
