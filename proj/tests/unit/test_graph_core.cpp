#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "recolor/chordal.hpp"
#include "recolor/coloring.hpp"
#include "recolor/connectivity.hpp"
#include "recolor/generators.hpp"
#include "recolor/oracle.hpp"

using namespace recolor;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("graph construction rejects malformed edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.induced(std::vector<Vertex>{2, 1}).has_edge(0, 1));
}

TEST_CASE("has_edge agrees between the bitset and sorted-list paths") {
  std::mt19937_64 rng(7);
  std::vector<Edge> e;
  const int n = Graph::kBitsetLimit + 10;
  for (int i = 0; i < 3000; ++i) {
    Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u != v) e.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  Graph big(n, e);
  for (auto [u, v] : e) CHECK(big.has_edge(v, u));
  CHECK_FALSE(big.has_edge(0, 0));
}

TEST_CASE("is_proper_coloring") {
  Graph k2(2, {{0, 1}});
  CHECK(is_proper_coloring(k2, Coloring(2, {1, 2})));
  CHECK_FALSE(is_proper_coloring(k2, Coloring(2, {1, 1})));
  CHECK(is_proper_coloring(gen_interval_family(8), gen_interval_coloring(8, {})));
  CHECK_THROWS_AS(is_proper_coloring(k2, Coloring(2, {1})), InputError);
  CHECK_THROWS_AS(Coloring(2, {3}), InputError);
}

TEST_CASE("colorings_adjacent") {
  CHECK(colorings_adjacent(Coloring(3, {1, 2}), Coloring(3, {1, 3})));
  CHECK_FALSE(colorings_adjacent(Coloring(3, {1, 2}), Coloring(3, {1, 2})));
  CHECK_FALSE(colorings_adjacent(Coloring(3, {1, 2}), Coloring(3, {3, 1})));
  CHECK_THROWS_AS(colorings_adjacent(Coloring(3, {1, 2}), Coloring(3, {1, 2, 3})), InputError);
  CHECK_THROWS_AS(colorings_adjacent(Coloring(3, {1, 2}), Coloring(4, {1, 2})), InputError);
}

TEST_CASE("restrict_coloring") {
  Coloring c(3, {1, 2, 3});
  Vertex zero[] = {0};
  auto r = restrict_coloring(c, zero);
  CHECK(r.size() == 1);
  CHECK(r.at(0) == 1);
  Vertex all[] = {0, 1, 2};
  CHECK(restrict_coloring(c, all) == c);
  Vertex outside[] = {3};
  CHECK_THROWS_AS(restrict_coloring(c, outside), InputError);

  Vertex tail[] = {6, 7};
  auto t = restrict_coloring(gen_interval_coloring(8, {}), tail);
  CHECK(std::vector<Color>(t.colors().begin(), t.colors().end()) == std::vector<Color>{1, 2});

  // restricting twice equals restricting once
  Coloring wide(4, {1, 2, 3, 4, 1, 2});
  Vertex a[] = {1, 3, 4, 5};
  Vertex b[] = {3, 5};
  CHECK(restrict_coloring(restrict_coloring(wide, a), b) == restrict_coloring(wide, b));
}

TEST_CASE("perfect elimination ordering and chordality") {
  CHECK(perfect_elimination_ordering(complete(3)).has_value());
  CHECK_FALSE(perfect_elimination_ordering(cycle(4)).has_value());
  auto g8 = gen_interval_family(8);
  auto peo = perfect_elimination_ordering(g8);
  REQUIRE(peo.has_value());
  CHECK(is_perfect_elimination_ordering(g8, *peo));
  CHECK_FALSE(brute::has_long_induced_cycle(g8));
  CHECK(is_chordal(complete(3)));
  CHECK_FALSE(is_chordal(cycle(5)));
  auto q3 = gen_quadratic_family(3);
  CHECK(is_chordal(q3));
  CHECK_FALSE(brute::has_long_induced_cycle(q3));
}

TEST_CASE("is_chordal matches induced-cycle search on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = brute::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100, rng);
    CHECK(is_chordal(g) == !brute::has_long_induced_cycle(g));
  }
}

TEST_CASE("max_clique_chordal") {
  CHECK(max_clique_chordal(complete(4)).size() == 4);
  CHECK(max_clique_chordal(path(3)).size() == 2);
  auto g8 = gen_interval_family(8);
  CHECK(static_cast<int>(max_clique_chordal(g8).size()) == brute::clique_number(g8));
  CHECK(max_clique_chordal(g8).size() == 4);
  CHECK_THROWS_AS(max_clique_chordal(cycle(4)), InputError);
  CHECK_THROWS_AS(max_clique_chordal(Graph(0)), InputError);
}

TEST_CASE("greedy_chordal_coloring") {
  CHECK(greedy_chordal_coloring(complete(3), 3).has_value());
  CHECK_FALSE(greedy_chordal_coloring(complete(3), 2).has_value());
  auto g8 = gen_interval_family(8);
  auto c = greedy_chordal_coloring(g8, 4);
  REQUIRE(c.has_value());
  CHECK(is_proper_coloring(g8, *c));
  CHECK_THROWS_AS(greedy_chordal_coloring(cycle(4), 3), InputError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = gen_random_chordal_mixed(12, 4 + static_cast<int>(rng() % 2), rng());
    int omega = static_cast<int>(max_clique_chordal(g).size());
    auto col = greedy_chordal_coloring(g, omega);
    REQUIRE(col.has_value());
    CHECK(is_proper_coloring(g, *col));
  }
}

TEST_CASE("is_l_connected") {
  CHECK(is_l_connected(complete(4), 3));
  CHECK_FALSE(is_l_connected(Graph(4, {{0, 1}, {0, 2}, {0, 3}}), 2));
  CHECK(is_l_connected(gen_interval_family(8), 2));
  CHECK(brute::l_connected(gen_interval_family(8), 2));
  CHECK_THROWS_AS(is_l_connected(complete(3), 0), InputError);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = brute::random_graph(n, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100, rng);
    for (int l = 1; l <= 4; ++l) CHECK(is_l_connected(g, l) == brute::l_connected(g, l));
  }
}

TEST_CASE("reduce_low_degree") {
  auto p5 = reduce_low_degree(path(5), 3);
  CHECK(p5.graph.vertex_count() == 0);
  CHECK(p5.removed.size() == 5);
  auto k4 = reduce_low_degree(complete(4), 4);
  CHECK(k4.graph == complete(4));
  CHECK(k4.removed.empty());
  auto g8 = reduce_low_degree(gen_interval_family(8), 4);
  CHECK(g8.kept == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(g8.graph == complete(4));
  CHECK(g8.removed.front() == 7);
}

TEST_CASE("reduce_low_degree preserves reachability on small graphs") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    int k = 3 + static_cast<int>(rng() % 2);
    Graph g = brute::random_graph(n, 0.55, rng);
    auto cols = brute::proper_colorings(g, k);
    if (cols.empty()) continue;
    auto red = reduce_low_degree(g, k);
    for (int pair = 0; pair < 5; ++pair) {
      Coloring a(k, cols[rng() % cols.size()]), b(k, cols[rng() % cols.size()]);
      bool full = oracle_reachable(g, k, a, b);
      auto sa = restrict_coloring(a, red.kept), sb = restrict_coloring(b, red.kept);
      Coloring ra(k, std::vector<Color>(sa.colors().begin(), sa.colors().end()));
      Coloring rb(k, std::vector<Color>(sb.colors().begin(), sb.colors().end()));
      CHECK(full == oracle_reachable(red.graph, k, ra, rb));
    }
  }
}

TEST_CASE("color lists") {
  ColorListAssignment lists(3, {{2, 1}, {3}});
  CHECK(lists.allows(0, 1));
  CHECK_FALSE(lists.allows(0, 3));
  CHECK(lists.list(0).size() == 2);
  CHECK_THROWS_AS(ColorListAssignment(3, {{}}), InputError);
  CHECK_THROWS_AS(ColorListAssignment(3, {{4}}), InputError);
  Graph k2(2, {{0, 1}});
  CHECK(is_list_coloring(k2, Coloring(3, {1, 3}), lists));
  CHECK_FALSE(is_list_coloring(k2, Coloring(3, {3, 1}), lists));
}
