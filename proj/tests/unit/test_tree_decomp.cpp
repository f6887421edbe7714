#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "recolor/chordal.hpp"
#include "recolor/connectivity.hpp"
#include "recolor/generators.hpp"
#include "recolor/tree_decomposition.hpp"

using namespace recolor;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

std::vector<Vertex> all_of(const Graph& g) {
  std::vector<Vertex> v(static_cast<std::size_t>(g.vertex_count()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("classify_next_operation follows the fixed case order") {
  Graph k3 = complete(3);
  CHECK(std::holds_alternative<LeafDone>(classify_next_operation({&k3, all_of(k3), all_of(k3)})));

  Graph star(3, {{0, 1}, {0, 2}});
  auto join = classify_next_operation({&star, {0, 1, 2}, {0}});
  REQUIRE(std::holds_alternative<JoinChoice>(join));
  CHECK(std::get<JoinChoice>(join).component == std::vector<Vertex>{1});

  Graph p3(3, {{0, 1}, {1, 2}});
  auto intro = classify_next_operation({&p3, {0, 1, 2}, {0, 1}});
  REQUIRE(std::holds_alternative<IntroduceChoice>(intro));
  CHECK(std::get<IntroduceChoice>(intro).vertex == 0);

  auto forget = classify_next_operation({&p3, {0, 1, 2}, {0}});
  REQUIRE(std::holds_alternative<ForgetChoice>(forget));
  CHECK(std::get<ForgetChoice>(forget).vertex == 1);

  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_THROWS_AS(classify_next_operation({&c4, {0, 1, 2, 3}, {0}}), InputError);
  CHECK_THROWS_AS(classify_next_operation({&p3, {0, 1, 2}, {0, 2}}), InputError);
}

TEST_CASE("build_chordal_nice_td on small fixed graphs") {
  auto leaf = build_chordal_nice_td(complete(4), {0, 1, 2, 3});
  CHECK(leaf.size() == 1);
  CHECK(leaf.nodes[0].kind == NodeKind::Leaf);
  CHECK(td_width(leaf) == 3);
  CHECK(td_width(build_chordal_nice_td(complete(3), {0, 1, 2})) == 2);

  auto g8 = gen_interval_family(8);
  auto td = build_chordal_nice_td(g8, {6, 7});
  auto ok = validate_nice_td(td, g8, true);
  CHECK_MESSAGE(ok.ok, ok.reason);
  CHECK(td.size() <= 56);
  CHECK(td_width(td) == 3);
  CHECK(td.nodes[static_cast<std::size_t>(td.root)].bag == std::vector<Vertex>{6, 7});

  CHECK_THROWS_AS(build_chordal_nice_td(Graph(0), {}), InputError);
  CHECK_THROWS_AS(build_chordal_nice_td(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), {0}), InputError);
  CHECK_THROWS_AS(build_chordal_nice_td(g8, {0, 7}), InputError);
  CHECK_THROWS_AS(td_width(NiceTreeDecomposition{}), InputError);
}

TEST_CASE("postorder lists children before parents") {
  auto g = gen_random_chordal_mixed(20, 4, 99);
  auto td = build_chordal_nice_td(g);
  auto order = td.postorder();
  REQUIRE(order.size() == td.size());
  CHECK(order.back() == td.root);
  std::vector<int> position(td.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < td.size(); ++i)
    for (int c : td.nodes[i].children) CHECK(position[static_cast<std::size_t>(c)] < position[i]);
}

TEST_CASE("td_size_budget") {
  CHECK(td_size_budget(1, 1, 1) == 1);
  CHECK(td_size_budget(5, 2, 3) == 18);
  for (long long n = 1; n <= 30; ++n)
    for (long long t = 0; t <= n; ++t)
      for (long long w = 1; w <= 8; ++w) CHECK(td_size_budget(n, t, w) <= (w + 4) * n);
  CHECK_THROWS_AS(td_size_budget(0, 0, 1), InputError);
  CHECK_THROWS_AS(td_size_budget(3, 4, 1), InputError);
}

TEST_CASE("validate_nice_td rejects broken decompositions") {
  Graph p3(3, {{0, 1}, {1, 2}});
  auto td = build_chordal_nice_td(p3, {1});
  REQUIRE(validate_nice_td(td, p3, true).ok);

  SUBCASE("introduce vertex with a neighbor outside the bag") {
    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    NiceTreeDecomposition bad;
    bad.nodes.push_back({NodeKind::Leaf, -1, {1, 2}, {}});
    bad.nodes.push_back({NodeKind::Introduce, 0, {0, 1}, {0}});
    bad.root = 1;
    CHECK_FALSE(validate_nice_td(bad, tri, false).ok);
  }
  SUBCASE("join sides sharing a non-bag vertex") {
    Graph path4(4, {{0, 1}, {1, 2}, {2, 3}});
    NiceTreeDecomposition bad;
    bad.nodes.push_back({NodeKind::Leaf, -1, {0, 1}, {}});
    bad.nodes.push_back({NodeKind::Leaf, -1, {1, 2}, {}});
    bad.nodes.push_back({NodeKind::Forget, 2, {1}, {1}});
    bad.nodes.push_back({NodeKind::Leaf, -1, {0, 1}, {}});
    bad.nodes.push_back({NodeKind::Forget, 0, {1}, {3}});
    bad.nodes.push_back({NodeKind::Join, -1, {1}, {2, 4}});
    bad.root = 5;
    CHECK_FALSE(validate_nice_td(bad, path4, false).ok);
  }
  SUBCASE("leaf bag that is not a clique in chordal mode") {
    NiceTreeDecomposition bad;
    bad.nodes.push_back({NodeKind::Leaf, -1, {0, 1, 2}, {}});
    bad.root = 0;
    CHECK(validate_nice_td(bad, p3, false).ok);
    CHECK_FALSE(validate_nice_td(bad, p3, true).ok);
  }
  SUBCASE("decomposition missing a vertex") {
    NiceTreeDecomposition bad;
    bad.nodes.push_back({NodeKind::Leaf, -1, {0, 1}, {}});
    bad.root = 0;
    CHECK_FALSE(validate_nice_td(bad, p3, false).ok);
  }
}

TEST_CASE("random chordal decompositions are valid and within the size bounds") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    int k = 3 + static_cast<int>(rng() % 4);
    int n = k + static_cast<int>(rng() % 40);
    Graph g = trial % 2 ? gen_random_connected_chordal(n, k, k - 2, rng()) : gen_random_chordal_mixed(n, k, rng());
    auto td = build_chordal_nice_td(g);
    auto ok = validate_nice_td(td, g, true);
    REQUIRE_MESSAGE(ok.ok, ok.reason);
    const long long w = td_width(td);
    const long long t = static_cast<long long>(td.nodes[static_cast<std::size_t>(td.root)].bag.size());
    CHECK(static_cast<long long>(td.size()) <= (k + 3) * n);
    CHECK(static_cast<long long>(td.size()) <= td_size_budget(n, t, w));
  }
}

TEST_CASE("connectivity is inherited along the decomposition on small hosts") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int k = 3 + static_cast<int>(rng() % 3);
    int n = k + static_cast<int>(rng() % (13 - k));
    Graph g = gen_random_chordal_mixed(n, k, rng());
    const int l = k - 2;
    REQUIRE(brute::l_connected(g, l));
    auto td = build_chordal_nice_td(g);
    auto sets = subtree_vertex_sets(td);
    for (std::size_t i = 0; i < td.size(); ++i) {
      const auto& node = td.nodes[i];
      if (node.kind == NodeKind::Introduce && sets[i].size() > node.bag.size()) {
        CHECK(static_cast<int>(node.bag.size()) >= l + 1);
        ++checked;
      }
      if (node.kind == NodeKind::Join) {
        CHECK(static_cast<int>(node.bag.size()) >= l);
        for (int c : node.children) CHECK(brute::l_connected(g.induced(sets[static_cast<std::size_t>(c)]), l));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("build_nice_td handles non-chordal graphs") {
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  auto td = build_nice_td(c5);
  auto ok = validate_nice_td(td, c5, false);
  CHECK_MESSAGE(ok.ok, ok.reason);
  auto rooted = build_nice_td(c5, {0, 2});
  CHECK(rooted.nodes[static_cast<std::size_t>(rooted.root)].bag == std::vector<Vertex>{0, 2});
  CHECK(validate_nice_td(rooted, c5, false).ok);
  auto empty_root = build_nice_td(c5, {});
  CHECK(empty_root.nodes[static_cast<std::size_t>(empty_root.root)].bag.empty());
  CHECK(validate_nice_td(empty_root, c5, false).ok);
  CHECK_THROWS_AS(build_nice_td(Graph(0)), InputError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = brute::random_graph(1 + static_cast<int>(rng() % 9), 0.4, rng);
    auto t = build_nice_td(g);
    auto v = validate_nice_td(t, g, false);
    CHECK_MESSAGE(v.ok, v.reason);
  }
}

TEST_CASE("quadratic family grows faster than linearly") {
  std::vector<long long> counts;
  for (int n = 3; n <= 8; ++n) {
    auto g = gen_quadratic_family(n);
    auto td = build_chordal_nice_td(g);
    REQUIRE(validate_nice_td(td, g, true).ok);
    counts.push_back(static_cast<long long>(td.size()));
  }
  for (std::size_t i = 2; i < counts.size(); ++i) CHECK(counts[i] - 2 * counts[i - 1] + counts[i - 2] > 0);
}
