#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "recolor/cli.hpp"
#include "recolor/generators.hpp"
#include "recolor/io.hpp"

using namespace recolor;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "recolor");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("recolor_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const io::json& j) {
    auto path = dir_ / name;
    std::ofstream(path) << io::dump(j);
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("json round trips") {
  auto g = gen_interval_family(8);
  CHECK(io::graph_from_json(io::graph_to_json(g)) == g);
  CHECK(io::graph_from_json(io::graph_to_json(g)).names() == g.names());
  auto c = gen_interval_coloring(8, {});
  CHECK(io::coloring_from_json(io::coloring_to_json(c)) == c);
  auto td = build_chordal_nice_td(g, {6, 7});
  auto back = io::td_from_json(io::td_to_json(td));
  CHECK(validate_nice_td(back, g, true).ok);
  CHECK(io::td_to_json(back) == io::td_to_json(td));
  auto csg = csg_over_decomposition(g, td, 4, c, c);
  CHECK(io::csg_to_json(io::csg_from_json(io::csg_to_json(csg))) == io::csg_to_json(csg));

  CHECK_THROWS_AS(io::graph_from_json(io::json::parse(R"({"n": 2})")), InputError);
  CHECK_THROWS_AS(io::graph_from_json(io::json::parse(R"({"n": 2, "edges": [[0, 0]]})")), InputError);
  CHECK_THROWS_AS(io::coloring_from_json(io::json::parse(R"({"k": 2, "colors": [3]})")), InputError);
  CHECK_THROWS_AS(io::csg_from_json(io::json::parse(R"({"k": 2, "terminals": [0], "labels": [[1]], "edges": [[0, 4]]})")),
                  InputError);
}

TEST_CASE("dot exports") {
  auto g = gen_interval_family(8);
  auto td = build_chordal_nice_td(g, {6, 7});
  auto dot = io::td_to_dot(td, g);
  CHECK(dot.rfind("digraph td {", 0) == 0);
  CHECK(dot.find("v6") != std::string::npos);
  std::vector<int> one{1};
  auto csg = csg_over_decomposition(g, td, 4, gen_interval_coloring(8, {}), gen_interval_coloring(8, one));
  auto cdot = io::csg_to_dot(csg, &g);
  CHECK(cdot.find("// terminals: (v6, v7)") != std::string::npos);
  CHECK(cdot.find("xlabel=\"alpha\"") != std::string::npos);
  CHECK(cdot.find("xlabel=\"beta\"") != std::string::npos);
  CHECK(cdot.find("label=\"12\"") != std::string::npos);
}

TEST_CASE("reach exit codes") {
  Scratch s;
  auto k3 = s.write("k3.json", io::graph_to_json(Graph(3, {{0, 1}, {0, 2}, {1, 2}})));
  auto a = s.write("a.json", io::coloring_to_json(Coloring(3, {1, 2, 3})));
  auto b = s.write("b.json", io::coloring_to_json(Coloring(3, {2, 1, 3})));
  for (std::string mode : {"fast", "generic", "oracle"}) {
    CAPTURE(mode);
    CHECK(run({"reach", "--graph", k3, "-k", "3", "--alpha", a, "--beta", a, "--mode", mode}).code == cli::kYes);
    CHECK(run({"reach", "--graph", k3, "-k", "3", "--alpha", a, "--beta", b, "--mode", mode}).code == cli::kNo);
  }

  auto g8 = s.write("g8.json", io::graph_to_json(gen_interval_family(8)));
  auto a8 = s.write("a8.json", io::coloring_to_json(gen_interval_coloring(8, {})));
  std::vector<int> one{1};
  auto b8 = s.write("b8.json", io::coloring_to_json(gen_interval_coloring(8, one)));
  auto yes = run({"reach", "--graph", g8, "-k", "4", "--alpha", a8, "--beta", b8, "--mode", "fast"});
  CHECK(yes.code == cli::kYes);
  CHECK(io::json::parse(yes.out).at("answer") == "YES");
  auto rooted = run({"reach", "--graph", g8, "-k", "4", "--alpha", a8, "--beta", b8, "--root-clique", "6,7"});
  CHECK(rooted.code == cli::kYes);
  CHECK(io::json::parse(rooted.out).at("counters").at("path_length_peak").get<int>() > 0);
  auto bad_root = run({"reach", "--graph", g8, "-k", "4", "--alpha", a8, "--beta", b8, "--root-clique", "0,7"});
  CHECK(bad_root.code == cli::kInputError);
  CHECK(io::json::parse(bad_root.out).at("predicate") == "root-clique");

  auto tight = run({"reach", "--graph", g8, "-k", "4", "--alpha", a8, "--beta", b8, "--mode", "generic", "--budget", "5"});
  CHECK(tight.code == cli::kBudgetExceeded);

  auto c4 = s.write("c4.json", io::graph_to_json(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  auto c4a = s.write("c4a.json", io::coloring_to_json(Coloring(3, {1, 2, 1, 2})));
  auto pre = run({"reach", "--graph", c4, "-k", "3", "--alpha", c4a, "--beta", c4a, "--mode", "fast"});
  CHECK(pre.code == cli::kInputError);
  CHECK(io::json::parse(pre.out).at("predicate") == "chordal");
  CHECK(run({"reach", "--graph", c4, "-k", "3", "--alpha", c4a, "--beta", c4a, "--mode", "generic"}).code == cli::kYes);

  CHECK(run({"reach", "--graph", s.path("missing.json"), "-k", "3", "--alpha", a, "--beta", a}).code ==
        cli::kInputError);
  auto improper = s.write("bad.json", io::coloring_to_json(Coloring(3, {1, 1, 2})));
  CHECK(run({"reach", "--graph", k3, "-k", "3", "--alpha", improper, "--beta", a}).code == cli::kInputError);
}

TEST_CASE("decompose and csg") {
  Scratch s;
  auto k4 = s.write("k4.json", io::graph_to_json(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  auto leaf = run({"decompose", "--graph", k4});
  REQUIRE(leaf.code == 0);
  CHECK(io::json::parse(leaf.out).at("node_count") == 1);

  auto g8 = s.write("g8.json", io::graph_to_json(gen_interval_family(8)));
  auto dec = run({"decompose", "--graph", g8, "--root-clique", "6,7", "-k", "4", "--dot", s.path("td.dot")});
  REQUIRE(dec.code == 0);
  auto report = io::json::parse(dec.out);
  CHECK(report.at("valid") == true);
  CHECK(report.at("node_count").get<int>() <= 56);
  CHECK(fs::exists(s.path("td.dot")));

  auto k2 = s.write("k2.json", io::graph_to_json(Graph(2, {{0, 1}})));
  for (std::string engine : {"dp", "oracle"}) {
    auto r = run({"csg", "--graph", k2, "-k", "3", "--terminals", "0,1", "--engine", engine});
    REQUIRE(r.code == 0);
    auto csg = io::csg_from_json(io::json::parse(r.out));
    CHECK(csg.node_count() == 6);
    CHECK(csg.edge_count() == 6);
  }
  auto none = run({"csg", "--graph", k4, "-k", "4", "--terminals", ""});
  REQUIRE(none.code == 0);
  CHECK(io::csg_from_json(io::json::parse(none.out)).node_count() == 24);

  auto dot = run({"csg", "--graph", k2, "-k", "3", "--terminals", "0,1", "--format", "dot"});
  CHECK(dot.out.rfind("graph csg {", 0) == 0);
}

TEST_CASE("verify passes on sound instances and tags corrupted csgs") {
  Scratch s;
  auto g8 = s.write("g8.json", io::graph_to_json(gen_interval_family(8)));
  auto ok = run({"verify", "--graph", g8, "-k", "4", "--max-n", "8"});
  CHECK(ok.code == 0);
  CHECK(io::json::parse(ok.out).at("passed") == true);
  CHECK(run({"verify", "--graph", g8, "-k", "4"}).code == cli::kInputError);

  Graph k2(2, {{0, 1}});
  auto k2f = s.write("k2.json", io::graph_to_json(k2));
  auto good = run({"csg", "--graph", k2f, "-k", "3", "--terminals", "0"});
  REQUIRE(good.code == 0);
  auto j = io::json::parse(good.out);
  auto good_file = s.write("good.json", j);
  CHECK(run({"verify", "--graph", k2f, "-k", "3", "--csg", good_file}).code == 0);

  auto tag_of = [&](const io::json& corrupted) {
    auto r = run({"verify", "--graph", k2f, "-k", "3", "--csg", s.write("bad.json", corrupted)});
    CHECK(r.code == cli::kMismatch);
    auto fails = io::json::parse(r.out).at("failures");
    REQUIRE_FALSE(fails.empty());
    return fails[0].at("property").get<std::string>();
  };
  auto dropped_edge = j;
  dropped_edge["edges"].erase(0);
  CHECK(tag_of(dropped_edge) == "e");
  auto relabeled = j;
  relabeled["labels"][0] = io::json::array({relabeled["labels"][1][0]});
  auto tag = tag_of(relabeled);
  CHECK((tag == "c" || tag == "a"));
}

TEST_CASE("gen is deterministic") {
  auto a = run({"gen", "random-chordal", "--n", "20", "-k", "4", "--seed", "1"});
  auto b = run({"gen", "random-chordal", "--n", "20", "-k", "4", "--seed", "1"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto interval = io::graph_from_json(io::json::parse(run({"gen", "interval", "--p", "8"}).out));
  CHECK(interval.edge_count() == 14);
  CHECK(io::graph_from_json(io::json::parse(run({"gen", "quadratic", "--n", "3"}).out)).vertex_count() == 9);
  CHECK(run({"gen", "interval", "--p", "2"}).code == cli::kInputError);
}
