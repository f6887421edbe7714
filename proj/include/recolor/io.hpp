#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "recolor/coloring.hpp"
#include "recolor/csg.hpp"
#include "recolor/graph.hpp"
#include "recolor/tree_decomposition.hpp"

namespace recolor::io {

using json = nlohmann::ordered_json;

/// {"n": int, "edges": [[u,v],...], "names": {"0": "a", ...}}; names optional.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"k": int, "colors": [c_0, ..., c_{n-1}]}.
json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

json td_to_json(const NiceTreeDecomposition& td);
NiceTreeDecomposition td_from_json(const json& j);
/// Directed tree, root at the top; nodes show kind, vertex and bag.
std::string td_to_dot(const NiceTreeDecomposition& td, const Graph& g);

/// {"k", "terminals", "labels": [[...], ...], "edges", "marks": {"alpha", "beta"}}.
json csg_to_json(const Csg& csg);
Csg csg_from_json(const json& j);
/// Undirected graph; node labels use the compact color-sequence notation and
/// the terminal order is printed as a comment. Alpha/beta nodes are filled.
std::string csg_to_dot(const Csg& csg, const Graph* names_from = nullptr);

/// Parses a file; parse failures become InputError.
json read_json_file(const std::filesystem::path& path);
/// Serializes with two-space indentation and a trailing newline.
std::string dump(const json& j);

}  // namespace recolor::io
