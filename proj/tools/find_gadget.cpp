// Searches 7-vertex chordal graphs containing K4 on {0,1,2,3} for a gadget
// whose 4-color CSG at T = {6} has a component that is a star: one node
// labeled 1 joined to six leaves, two each labeled 2, 3 and 4.
#include <iostream>
#include <map>

#include "recolor/chordal.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"

using namespace recolor;

namespace {

bool is_target_star(const Csg& csg, const std::vector<int>& comp, int c) {
  std::vector<NodeId> members;
  for (std::size_t x = 0; x < comp.size(); ++x)
    if (comp[x] == c) members.push_back(static_cast<NodeId>(x));
  if (members.size() != 7) return false;
  for (NodeId center : members) {
    if (csg.label(center)[0] != 1 || csg.neighbors(center).size() != 6) continue;
    std::map<Color, int> leaves;
    for (NodeId y : csg.neighbors(center)) {
      if (csg.neighbors(y).size() != 1) return false;
      ++leaves[csg.label(y)[0]];
    }
    return leaves == std::map<Color, int>{{2, 2}, {3, 2}, {4, 2}};
  }
  return false;
}

}  // namespace

int main() {
  std::vector<Edge> free_pairs;
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = u + 1; v < 7; ++v)
      if (!(u < 4 && v < 4)) free_pairs.emplace_back(u, v);
  const Vertex hub[] = {6};
  for (std::uint32_t mask = 0; mask < (1u << free_pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
    for (std::size_t i = 0; i < free_pairs.size(); ++i)
      if (mask >> i & 1u) edges.push_back(free_pairs[i]);
    Graph g(7, edges);
    if (!is_connected(g) || !is_chordal(g)) continue;
    if (max_clique_chordal(g).size() > 4) continue;
    SolutionGraph sg = enumerate_solution_graph(g, 4);
    Csg csg = contract_solution_graph(sg, hub);
    auto comp = csg.components();
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    for (int c = 0; c < count; ++c)
      if (is_target_star(csg, comp, c)) {
        std::cout << io::graph_to_json(g).dump() << "\n";
        return 0;
      }
  }
  std::cerr << "no gadget found\n";
  return 1;
}
