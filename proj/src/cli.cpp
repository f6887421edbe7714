#include "recolor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "recolor/chordal.hpp"
#include "recolor/connectivity.hpp"
#include "recolor/csg.hpp"
#include "recolor/essential.hpp"
#include "recolor/generators.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/tree_decomposition.hpp"

namespace recolor::cli {

namespace {

using io::json;
using Clock = std::chrono::steady_clock;

struct Failure {
  std::string check;
  char property = 0;
  std::string detail;
};

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("not a vertex id: '" + item + "'");
    }
  }
  return out;
}

std::size_t default_budget() {
  if (const char* env = std::getenv("CSG_BUDGET")) {
    try {
      std::size_t used = 0;
      unsigned long long value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw InputError("CSG_BUDGET must be a positive integer");
  }
  return NodeBudget{}.max_nodes;
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

json labels_json(const std::vector<std::vector<Color>>& labels, int k) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(label_text(l, k));
  return out;
}

void check_total(const Graph& g, const Coloring& c, int k, const char* name) {
  if (c.k() != k) throw InputError(std::string(name) + " uses k = " + std::to_string(c.k()) + ", expected " + std::to_string(k));
  if (!c.is_total_over(g.vertex_count()))
    throw InputError(std::string(name) + " does not color every vertex of the graph");
}

// Root CSG over a decomposition rooted at `terminals`; the empty graph is a
// single leaf with an empty bag.
DpResult generic_dp(const Graph& g, int k, std::span<const Vertex> terminals, std::span<const Coloring> tracked,
                    std::size_t budget) {
  NiceTreeDecomposition td;
  if (g.empty()) {
    td.nodes.push_back(TdNode{});
    td.root = 0;
  } else {
    td = build_nice_td(g, std::vector<Vertex>(terminals.begin(), terminals.end()));
  }
  DpOptions options;
  options.budget.max_nodes = budget;
  return run_csg_dp(g, td, k, tracked, options);
}

struct Options {
  std::string graph_file, alpha_file, beta_file, out_file, csg_file, gadget_file, walk_from;
  int k = 0;
  std::string mode = "fast";
  std::optional<std::size_t> budget;
  bool timings = false;
  std::string root_clique = "auto";
  std::string terminals;
  std::string engine = "dp";
  std::string format = "json";
  std::string dot_file;
  int max_n = 7;
  int pairs = 20;
  std::string family;
  int p = 0, n = 0, steps = 0, hub = 0;
  int conn = -1;
  double mixed = -1;
  std::uint64_t seed = 1;
  std::string subset;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int reach() {
    auto start = Clock::now();
    Graph g = io::graph_from_json(io::read_json_file(o_.graph_file));
    Coloring alpha = io::coloring_from_json(io::read_json_file(o_.alpha_file));
    Coloring beta = io::coloring_from_json(io::read_json_file(o_.beta_file));
    check_total(g, alpha, o_.k, "alpha");
    check_total(g, beta, o_.k, "beta");
    json report;
    report["command"] = "reach";
    report["mode"] = o_.mode;
    report["k"] = o_.k;
    report["n"] = g.vertex_count();
    json counters = json::object();
    bool answer = false;
    if (o_.mode == "fast") {
      FastOptions opts;
      if (o_.root_clique != "auto") opts.root_clique = parse_vertex_list(o_.root_clique);
      FastResult r = fast_reachability(g, o_.k, alpha, beta, opts);
      answer = r.answer;
      report["root_state"] = state_name(r.root_state);
      if (auto* fp = std::get_if<ForestPath>(&r.root_state)) report["path_labels"] = labels_json(fp->labels, o_.k);
      report["early_stop"] = r.early_stop;
      report["oracle_bypass"] = r.oracle_bypass;
      counters["decomposition_nodes"] = r.td_node_count;
      counters["path_weight_peak"] = r.max_weight;
      counters["path_length_peak"] = r.max_path_length;
    } else if (o_.mode == "generic") {
      if (!is_proper_coloring(g, alpha) || !is_proper_coloring(g, beta))
        throw InputError("alpha and beta must be proper colorings");
      const Coloring pair[] = {alpha, beta};
      DpResult r = generic_dp(g, o_.k, {}, pair, budget());
      answer = csg_reachable(r.root);
      counters["csg_nodes_peak"] = r.peak_nodes;
      counters["root_csg_nodes"] = r.root.node_count();
      report["early_stop"] = false;
    } else if (o_.mode == "oracle") {
      answer = oracle_reachable(g, o_.k, alpha, beta, OracleBudget{budget()});
      report["early_stop"] = false;
    } else {
      throw InputError("unknown mode '" + o_.mode + "'");
    }
    report["answer"] = answer ? "YES" : "NO";
    report["counters"] = std::move(counters);
    if (o_.timings) report["timings_ms"] = {{"total", elapsed_ms(start)}};
    emit(io::dump(report));
    return answer ? kYes : kNo;
  }

  int decompose() {
    auto start = Clock::now();
    Graph g = io::graph_from_json(io::read_json_file(o_.graph_file));
    if (!is_chordal(g)) throw InputError("decompose: graph is not chordal");
    std::vector<Vertex> root = o_.root_clique == "auto" ? max_clique_chordal(g) : parse_vertex_list(o_.root_clique);
    std::sort(root.begin(), root.end());
    NiceTreeDecomposition td = build_chordal_nice_td(g, root);
    auto check = validate_nice_td(td, g, true);
    const int w = td_width(td);
    const long long n = g.vertex_count();
    json report;
    report["command"] = "decompose";
    report["valid"] = check.ok;
    if (!check.ok) report["reason"] = check.reason;
    report["node_count"] = td.size();
    report["width"] = w;
    report["root_bag"] = td.nodes[static_cast<std::size_t>(td.root)].bag;
    const long long k = o_.k > 0 ? o_.k : w + 1;
    report["bound_k_plus_3_n"] = (k + 3) * n;
    report["bound_inductive"] = td_size_budget(n, static_cast<long long>(root.size()), std::max(w, 1));
    report["decomposition"] = io::td_to_json(td);
    if (o_.timings) report["timings_ms"] = {{"total", elapsed_ms(start)}};
    if (!o_.dot_file.empty()) write_file(o_.dot_file, io::td_to_dot(td, g));
    emit(io::dump(report));
    return check.ok ? kYes : kMismatch;
  }

  int csg() {
    Graph g = io::graph_from_json(io::read_json_file(o_.graph_file));
    std::vector<Vertex> terms = parse_vertex_list(o_.terminals);
    std::sort(terms.begin(), terms.end());
    std::vector<Coloring> tracked;
    if (!o_.alpha_file.empty() || !o_.beta_file.empty()) {
      if (o_.alpha_file.empty() || o_.beta_file.empty()) throw InputError("csg: give both --alpha and --beta");
      tracked.push_back(io::coloring_from_json(io::read_json_file(o_.alpha_file)));
      tracked.push_back(io::coloring_from_json(io::read_json_file(o_.beta_file)));
      for (const auto& c : tracked) check_total(g, c, o_.k, "tracked coloring");
    }
    Csg result;
    if (o_.engine == "dp") {
      result = generic_dp(g, o_.k, terms, tracked, budget()).root;
    } else if (o_.engine == "oracle") {
      SolutionGraph sg = enumerate_solution_graph(g, o_.k, OracleBudget{budget()});
      Partition parts = label_components(sg, terms);
      result = contract_solution_graph(sg, terms, parts);
      for (const auto& c : tracked) {
        auto idx = sg.find(c);
        if (!idx) throw InputError("csg: tracked coloring is not proper");
        result.marks.push_back(parts.part_of[static_cast<std::size_t>(*idx)]);
      }
    } else {
      throw InputError("unknown engine '" + o_.engine + "'");
    }
    if (o_.format == "dot") {
      emit(io::csg_to_dot(result, &g));
    } else if (o_.format == "json") {
      json j = io::csg_to_json(result);
      const auto comp = result.components();
      j["components"] = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
      emit(io::dump(j));
    } else {
      throw InputError("unknown format '" + o_.format + "'");
    }
    return kYes;
  }

  int verify() {
    auto start = Clock::now();
    Graph g = io::graph_from_json(io::read_json_file(o_.graph_file));
    if (g.vertex_count() > o_.max_n)
      throw InputError("verify: " + std::to_string(g.vertex_count()) + " vertices exceed --max-n " +
                       std::to_string(o_.max_n));
    const int k = o_.k;
    SolutionGraph sg = enumerate_solution_graph(g, k, OracleBudget{budget()});
    std::vector<Failure> failures;
    std::size_t checks = 0;
    const int n = g.vertex_count();

    if (!o_.csg_file.empty()) {
      Csg claimed = io::csg_from_json(io::read_json_file(o_.csg_file));
      ++checks;
      if (auto f = check_claimed_csg(claimed, sg)) failures.push_back(*f);
    } else {
      // Every terminal subset: certificate of the oracle contraction, and the
      // DP result against it.
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> terms;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1u) terms.push_back(v);
        Partition parts = label_components(sg, terms);
        Csg expected = contract_solution_graph(sg, terms, parts);
        ++checks;
        if (auto c = verify_csg_certificate(expected, parts, sg, terms); !c)
          failures.push_back({"certificate T=" + set_text(terms), c.property, c.detail});
        if (n == 0) continue;
        ++checks;
        Csg dp = generic_dp(g, k, terms, {}, budget()).root;
        if (!labeled_isomorphic(dp, expected))
          failures.push_back({"dp-vs-oracle T=" + set_text(terms), 0, "root CSG is not label-isomorphic"});
      }
      // Reachability on seeded coloring pairs.
      if (sg.size() > 0) {
        Partition comps = label_components(sg, {});
        std::mt19937_64 rng(o_.seed);
        const bool fast_ok = fast_applicable(g, k);
        for (int i = 0; i < o_.pairs; ++i) {
          auto a = static_cast<std::size_t>(rng() % sg.size());
          auto b = static_cast<std::size_t>(rng() % sg.size());
          Coloring alpha(k, std::vector<Color>(sg.coloring(a).begin(), sg.coloring(a).end()));
          Coloring beta(k, std::vector<Color>(sg.coloring(b).begin(), sg.coloring(b).end()));
          const bool truth = comps.part_of[a] == comps.part_of[b];
          const Coloring pair[] = {alpha, beta};
          ++checks;
          if (n > 0 && csg_reachable(generic_dp(g, k, {}, pair, budget()).root) != truth)
            failures.push_back({"reach-generic pair " + std::to_string(i), 0, "disagrees with the oracle"});
          if (fast_ok) {
            ++checks;
            if (fast_reachability(g, k, alpha, beta).answer != truth)
              failures.push_back({"reach-fast pair " + std::to_string(i), 0, "disagrees with the oracle"});
          }
        }
      }
    }
    json report;
    report["command"] = "verify";
    report["k"] = k;
    report["n"] = n;
    report["colorings"] = sg.size();
    report["checks"] = checks;
    report["passed"] = failures.empty();
    json fails = json::array();
    for (const auto& f : failures) {
      json j;
      j["check"] = f.check;
      if (f.property) j["property"] = std::string(1, f.property);
      j["detail"] = f.detail;
      fails.push_back(std::move(j));
    }
    report["failures"] = std::move(fails);
    if (o_.timings) report["timings_ms"] = {{"total", elapsed_ms(start)}};
    emit(io::dump(report));
    return failures.empty() ? kYes : kMismatch;
  }

  int gen() {
    const std::string& f = o_.family;
    if (f == "interval") {
      emit(io::dump(io::graph_to_json(gen_interval_family(o_.p))));
    } else if (f == "quadratic") {
      emit(io::dump(io::graph_to_json(gen_quadratic_family(o_.n))));
    } else if (f == "random-chordal") {
      Graph g = o_.mixed >= 0 ? gen_random_chordal_mixed(o_.n, o_.k, o_.seed, o_.mixed)
                              : gen_random_connected_chordal(o_.n, o_.k, o_.conn < 0 ? o_.k - 2 : o_.conn, o_.seed);
      emit(io::dump(io::graph_to_json(g)));
    } else if (f == "blowup") {
      Graph gadget = io::graph_from_json(io::read_json_file(o_.gadget_file));
      emit(io::dump(io::graph_to_json(gen_star_blowup(gadget, o_.hub, o_.p))));
    } else if (f == "interval-coloring") {
      std::vector<int> s;
      for (Vertex v : parse_vertex_list(o_.subset)) s.push_back(v);
      emit(io::dump(io::coloring_to_json(gen_interval_coloring(o_.p, s))));
    } else if (f == "random-coloring") {
      Graph g = io::graph_from_json(io::read_json_file(o_.graph_file));
      Coloring c = o_.walk_from.empty()
                       ? random_chordal_coloring(g, o_.k, o_.seed)
                       : random_recoloring_walk(g, io::coloring_from_json(io::read_json_file(o_.walk_from)),
                                                o_.steps, o_.seed);
      emit(io::dump(io::coloring_to_json(c)));
    } else {
      throw InputError("unknown family '" + f + "'");
    }
    return kYes;
  }

 private:
  std::size_t budget() const { return o_.budget ? *o_.budget : default_budget(); }

  void emit(const std::string& text) {
    if (o_.out_file.empty())
      out_ << text;
    else
      write_file(o_.out_file, text);
  }

  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write " + path);
    file << text;
  }

  static std::string set_text(const std::vector<Vertex>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  }

  static bool fast_applicable(const Graph& g, int k) {
    if (k < 3 || !is_chordal(g)) return false;
    if (g.vertex_count() <= k) return true;
    return max_clique_chordal(g).size() <= static_cast<std::size_t>(k) && is_l_connected(g, k - 2);
  }

  // A CSG supplied from a file is matched to the oracle's label components
  // by label; the first inconsistency is reported with its property tag.
  static std::optional<Failure> check_claimed_csg(const Csg& claimed, const SolutionGraph& sg) {
    const std::string name = "claimed-csg";
    if (claimed.k() != sg.k) return Failure{name, 'b', "k differs from the command line"};
    for (Vertex t : claimed.terminals())
      if (t < 0 || t >= sg.n) return Failure{name, 'b', "terminal out of range"};
    std::vector<Vertex> terms(claimed.terminals().begin(), claimed.terminals().end());
    Partition parts = label_components(sg, terms);
    Csg expected = contract_solution_graph(sg, terms, parts);
    if (auto e = claimed.equal_label_edge())
      return Failure{name, 'c', "adjacent nodes " + std::to_string(e->first) + " and " + std::to_string(e->second) +
                                    " share a label"};
    std::map<std::vector<Color>, std::pair<int, int>> count;  // label -> (claimed, oracle)
    for (std::size_t x = 0; x < expected.node_count(); ++x) {
      auto l = expected.label(static_cast<NodeId>(x));
      ++count[std::vector<Color>(l.begin(), l.end())].second;
    }
    for (std::size_t x = 0; x < claimed.node_count(); ++x) {
      auto l = claimed.label(static_cast<NodeId>(x));
      std::vector<Color> key(l.begin(), l.end());
      if (!count.contains(key))
        return Failure{name, 'b', "node " + std::to_string(x) + " carries a label no coloring restricts to"};
      ++count[key].first;
    }
    for (const auto& [label, c] : count) {
      if (c.first > c.second)
        return Failure{name, 'a', "label " + label_text(label, sg.k) + " has more nodes than label components"};
      if (c.first < c.second)
        return Failure{name, c.first == 0 ? 'a' : 'd',
                       "label " + label_text(label, sg.k) + " has fewer nodes than label components"};
    }
    if (!labeled_isomorphic(claimed, expected))
      return Failure{name, 'e', "edges do not match the cross-adjacent label components"};
    return std::nullopt;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recoloring reachability via contracted solution graphs", "recolor"};
  app.require_subcommand(1);
  Options o;
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option_function<std::size_t>("--budget", [&](const std::size_t& b) { o.budget = b; },
                                          "node budget (default: CSG_BUDGET or 1000000)")
        ->check(CLI::PositiveNumber);
  };

  auto* reach = app.add_subcommand("reach", "decide whether beta is reachable from alpha");
  reach->add_option("--graph", o.graph_file, "graph JSON")->required();
  reach->add_option("-k", o.k, "number of colors")->required();
  reach->add_option("--alpha", o.alpha_file, "coloring JSON")->required();
  reach->add_option("--beta", o.beta_file, "coloring JSON")->required();
  reach->add_option("--mode", o.mode, "fast | generic | oracle")
      ->check(CLI::IsMember({"fast", "generic", "oracle"}))
      ->capture_default_str();
  reach->add_option("--root-clique", o.root_clique, "fast mode root bag: auto or comma separated vertex ids")
      ->capture_default_str();
  budget_opt(reach);

  auto* decompose = app.add_subcommand("decompose", "chordal nice tree decomposition");
  decompose->add_option("--graph", o.graph_file, "graph JSON")->required();
  decompose->add_option("--root-clique", o.root_clique, "auto or comma separated vertex ids")->capture_default_str();
  decompose->add_option("-k", o.k, "colors, for the (k+3)n bound (default: width+1)");
  decompose->add_option("--dot", o.dot_file, "also write a DOT rendering");

  auto* csg = app.add_subcommand("csg", "contracted solution graph for a terminal set");
  csg->add_option("--graph", o.graph_file, "graph JSON")->required();
  csg->add_option("-k", o.k, "number of colors")->required();
  csg->add_option("--terminals", o.terminals, "comma separated vertex ids (empty for none)");
  csg->add_option("--alpha", o.alpha_file, "coloring JSON to mark");
  csg->add_option("--beta", o.beta_file, "coloring JSON to mark");
  csg->add_option("--engine", o.engine, "dp | oracle")->check(CLI::IsMember({"dp", "oracle"}))->capture_default_str();
  csg->add_option("--format", o.format, "json | dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  budget_opt(csg);

  auto* verify = app.add_subcommand("verify", "cross-check every engine against the oracle");
  verify->add_option("--graph", o.graph_file, "graph JSON")->required();
  verify->add_option("-k", o.k, "number of colors")->required();
  verify->add_option("--max-n", o.max_n, "refuse graphs with more vertices")->capture_default_str();
  verify->add_option("--csg", o.csg_file, "check this CSG JSON against the oracle instead");
  verify->add_option("--pairs", o.pairs, "random coloring pairs for reachability")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed for the coloring pairs")->capture_default_str();
  budget_opt(verify);

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->add_option("family", o.family,
                  "interval | quadratic | random-chordal | blowup | interval-coloring | random-coloring")
      ->required();
  gen->add_option("--p", o.p, "interval length / blow-up copies");
  gen->add_option("--n", o.n, "size parameter");
  gen->add_option("-k", o.k, "number of colors");
  gen->add_option("--conn", o.conn, "connectivity (random-chordal; must be k-2)");
  gen->add_option("--mixed", o.mixed, "probability of attaching to a (k-2)-clique");
  gen->add_option("--seed", o.seed, "random seed")->capture_default_str();
  gen->add_option("--gadget", o.gadget_file, "gadget graph JSON (blowup)");
  gen->add_option("--hub", o.hub, "hub vertex (blowup)");
  gen->add_option("--subset", o.subset, "comma separated subset of 1..q (interval-coloring)");
  gen->add_option("--graph", o.graph_file, "graph JSON (random-coloring)");
  gen->add_option("--walk-from", o.walk_from, "coloring JSON to start a random recoloring walk from");
  gen->add_option("--steps", o.steps, "walk length");

  for (auto* sub : {reach, decompose, csg, verify, gen}) {
    sub->add_option("--out", o.out_file, "write the result here instead of stdout");
    sub->add_flag("--timings", o.timings, "add wall-clock timings to the report");
  }

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Runner runner(o, out);
  try {
    if (reach->parsed()) return runner.reach();
    if (decompose->parsed()) return runner.decompose();
    if (csg->parsed()) return runner.csg();
    if (verify->parsed()) return runner.verify();
    return runner.gen();
  } catch (const PreconditionError& e) {
    io::json j;
    j["error"] = "precondition";
    j["predicate"] = e.predicate();
    j["message"] = e.what();
    out << io::dump(j);
    err << "error: precondition '" << e.predicate() << "' failed: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  }
}

}  // namespace recolor::cli
