#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "elimtree/elim_tree.hpp"
#include "elimtree/flip_graph.hpp"
#include "elimtree/fpt.hpp"
#include "elimtree/graph.hpp"

namespace elimtree::io {

// {"n": 3, "edges": [[0,1],[1,2]], "names": ["a","b","c"]}
// "names" is optional. When present, edge endpoints may be given either as
// ids or as names.
struct GraphFile {
  Graph graph;
  std::vector<std::string> names;  // empty when the file has none
};

GraphFile parse_graph(std::string_view text);
GraphFile read_graph(const std::filesystem::path& path);
std::string dump_graph(const Graph& g, const std::vector<std::string>& names = {});

// {"parent": [-1, 0, 1]}
ElimTree parse_tree(std::string_view text);
ElimTree read_tree(const std::filesystem::path& path);
std::string dump_tree(const ElimTree& t);

std::string read_text(const std::filesystem::path& path);

// {"nodes": [[-1,0,1], ...], "adjacency": [[1,2], ...]}
nlohmann::json flip_graph_json(const FlipGraph& fg);

// Diagnostic dump of an FPT run.
nlohmann::json explain_json(const fpt::Result& result);

}  // namespace elimtree::io
