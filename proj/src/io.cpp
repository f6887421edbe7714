#include "recolor/io.hpp"

#include <fstream>
#include <sstream>

namespace recolor::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::string vertex_name(const Graph* g, Vertex v) {
  if (g) {
    auto it = g->names().find(v);
    if (it != g->names().end()) return it->second;
  }
  return std::to_string(v);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.names().empty()) {
    json names = json::object();
    for (const auto& [v, name] : g.names()) names[std::to_string(v)] = name;
    j["names"] = std::move(names);
  }
  return j;
}

Graph graph_from_json(const json& j) {
  return guarded("graph JSON", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0) throw InputError("graph JSON: negative n");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: every edge must be a pair");
      auto u = e[0].get<Vertex>(), v = e[1].get<Vertex>();
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    Graph g(n, edges);
    if (j.contains("names"))
      for (const auto& [key, value] : j.at("names").items()) {
        Vertex v = 0;
        try {
          v = std::stoi(key);
        } catch (const std::exception&) {
          throw InputError("graph JSON: name key '" + key + "' is not a vertex id");
        }
        if (!g.contains(v)) throw InputError("graph JSON: name for unknown vertex " + key);
        g.set_name(v, value.get<std::string>());
      }
    return g;
  });
}

json coloring_to_json(const Coloring& c) {
  json j;
  j["k"] = c.k();
  j["colors"] = std::vector<int>(c.colors().begin(), c.colors().end());
  return j;
}

Coloring coloring_from_json(const json& j) {
  return guarded("coloring JSON", [&] {
    const int k = j.at("k").get<int>();
    std::vector<Color> colors;
    for (const auto& c : j.at("colors")) {
      int value = c.get<int>();
      if (value < 1 || value > k) throw InputError("coloring JSON: color " + std::to_string(value) + " outside 1..k");
      colors.push_back(static_cast<Color>(value));
    }
    return Coloring(k, std::move(colors));
  });
}

json td_to_json(const NiceTreeDecomposition& td) {
  json j;
  j["root"] = td.root;
  j["width"] = td.nodes.empty() ? -1 : td_width(td);
  j["node_count"] = td.size();
  json nodes = json::array();
  for (std::size_t i = 0; i < td.nodes.size(); ++i) {
    const auto& node = td.nodes[i];
    json n;
    n["id"] = i;
    n["kind"] = to_string(node.kind);
    if (node.kind == NodeKind::Forget || node.kind == NodeKind::Introduce) n["vertex"] = node.vertex;
    n["bag"] = node.bag;
    n["children"] = node.children;
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

NiceTreeDecomposition td_from_json(const json& j) {
  return guarded("decomposition JSON", [&] {
    NiceTreeDecomposition td;
    td.root = j.at("root").get<int>();
    for (const auto& n : j.at("nodes")) {
      TdNode node;
      const auto kind = n.at("kind").get<std::string>();
      if (kind == "leaf") node.kind = NodeKind::Leaf;
      else if (kind == "forget") node.kind = NodeKind::Forget;
      else if (kind == "introduce") node.kind = NodeKind::Introduce;
      else if (kind == "join") node.kind = NodeKind::Join;
      else throw InputError("decomposition JSON: unknown node kind '" + kind + "'");
      if (n.contains("vertex")) node.vertex = n.at("vertex").get<Vertex>();
      node.bag = n.at("bag").get<std::vector<Vertex>>();
      node.children = n.at("children").get<std::vector<int>>();
      td.nodes.push_back(std::move(node));
    }
    return td;
  });
}

std::string td_to_dot(const NiceTreeDecomposition& td, const Graph& g) {
  std::ostringstream out;
  out << "digraph td {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < td.nodes.size(); ++i) {
    const auto& node = td.nodes[i];
    std::string head = to_string(node.kind);
    if (node.kind == NodeKind::Forget || node.kind == NodeKind::Introduce)
      head += " " + vertex_name(&g, node.vertex);
    std::string bag;
    for (std::size_t b = 0; b < node.bag.size(); ++b) bag += (b ? "," : "") + vertex_name(&g, node.bag[b]);
    out << "  t" << i << " [label=\"" << escape(head) << "\\n{" << escape(bag) << "}\"];\n";
  }
  for (std::size_t i = 0; i < td.nodes.size(); ++i)
    for (int c : td.nodes[i].children) out << "  t" << i << " -> t" << c << ";\n";
  out << "}\n";
  return out.str();
}

json csg_to_json(const Csg& csg) {
  json j;
  j["k"] = csg.k();
  j["terminals"] = std::vector<Vertex>(csg.terminals().begin(), csg.terminals().end());
  j["node_count"] = csg.node_count();
  json labels = json::array();
  for (std::size_t x = 0; x < csg.node_count(); ++x) {
    auto lab = csg.label(static_cast<NodeId>(x));
    labels.push_back(std::vector<int>(lab.begin(), lab.end()));
  }
  j["labels"] = std::move(labels);
  json edges = json::array();
  for (std::size_t x = 0; x < csg.node_count(); ++x)
    for (NodeId y : csg.neighbors(static_cast<NodeId>(x)))
      if (static_cast<std::size_t>(y) > x) edges.push_back({x, y});
  j["edges"] = std::move(edges);
  if (csg.marks.size() >= 2) j["marks"] = {{"alpha", csg.marks[0]}, {"beta", csg.marks[1]}};
  return j;
}

Csg csg_from_json(const json& j) {
  return guarded("CSG JSON", [&] {
    Csg csg(j.at("k").get<int>(), j.at("terminals").get<std::vector<Vertex>>());
    for (const auto& lab : j.at("labels")) {
      std::vector<Color> colors;
      for (const auto& c : lab) colors.push_back(c.get<Color>());
      csg.add_node(colors);
    }
    const auto count = static_cast<NodeId>(csg.node_count());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("CSG JSON: every edge must be a pair");
      auto x = e[0].get<NodeId>(), y = e[1].get<NodeId>();
      if (x < 0 || y < 0 || x >= count || y >= count) throw InputError("CSG JSON: edge endpoint out of range");
      csg.add_edge(x, y);
    }
    csg.finalize();
    if (j.contains("marks")) {
      for (const char* key : {"alpha", "beta"}) {
        auto m = j.at("marks").at(key).get<NodeId>();
        if (m < 0 || m >= count) throw InputError("CSG JSON: mark out of range");
        csg.marks.push_back(m);
      }
    }
    return csg;
  });
}

std::string csg_to_dot(const Csg& csg, const Graph* names_from) {
  std::ostringstream out;
  out << "graph csg {\n  // terminals: (";
  for (std::size_t i = 0; i < csg.arity(); ++i) out << (i ? ", " : "") << vertex_name(names_from, csg.terminals()[i]);
  out << ")\n  node [shape=ellipse];\n";
  for (std::size_t x = 0; x < csg.node_count(); ++x) {
    out << "  n" << x << " [label=\"" << label_text(csg.label(static_cast<NodeId>(x)), csg.k()) << "\"";
    const bool is_alpha = csg.marks.size() >= 1 && csg.marks[0] == static_cast<NodeId>(x);
    const bool is_beta = csg.marks.size() >= 2 && csg.marks[1] == static_cast<NodeId>(x);
    if (is_alpha && is_beta)
      out << ", style=filled, fillcolor=\"palegreen\", xlabel=\"alpha,beta\"";
    else if (is_alpha)
      out << ", style=filled, fillcolor=\"lightblue\", xlabel=\"alpha\"";
    else if (is_beta)
      out << ", style=filled, fillcolor=\"lightpink\", xlabel=\"beta\"";
    out << "];\n";
  }
  for (std::size_t x = 0; x < csg.node_count(); ++x)
    for (NodeId y : csg.neighbors(static_cast<NodeId>(x)))
      if (static_cast<std::size_t>(y) > x) out << "  n" << x << " -- n" << y << ";\n";
  out << "}\n";
  return out.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace recolor::io
