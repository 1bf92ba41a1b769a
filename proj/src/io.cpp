#include "elimtree/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "elimtree/error.hpp"

namespace elimtree::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphFile parse_graph(std::string_view text) {
  const json doc = parse_json(text, "graph file");
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "graph file needs an integer field \"n\"");
  }
  GraphFile out;
  const auto n = doc["n"].get<VertexId>();
  std::unordered_map<std::string, VertexId> by_name;
  if (doc.contains("names")) {
    if (!doc["names"].is_array() || doc["names"].size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::ParseError, "\"names\" must be an array of n strings");
    }
    for (const auto& name : doc["names"]) {
      if (!name.is_string()) throw Error(ErrorCode::ParseError, "vertex names must be strings");
      if (!by_name.emplace(name.get<std::string>(), static_cast<VertexId>(out.names.size())).second) {
        throw Error(ErrorCode::ParseError, "duplicate vertex name " + name.dump());
      }
      out.names.push_back(name.get<std::string>());
    }
  }
  auto endpoint = [&](const json& x) -> VertexId {
    if (x.is_number_integer()) return x.get<VertexId>();
    if (x.is_string()) {
      auto it = by_name.find(x.get<std::string>());
      if (it == by_name.end()) throw Error(ErrorCode::InvalidVertex, "unknown vertex name " + x.dump());
      return it->second;
    }
    throw Error(ErrorCode::ParseError, "edge endpoints must be integers or names");
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  const json empty = json::array();
  const json& list = doc.contains("edges") ? doc["edges"] : empty;
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edges are [u, v] pairs");
    edges.emplace_back(endpoint(e[0]), endpoint(e[1]));
  }
  out.graph = Graph::from_edge_list(n, edges);
  return out;
}

GraphFile read_graph(const std::filesystem::path& path) { return parse_graph(read_text(path)); }

std::string dump_graph(const Graph& g, const std::vector<std::string>& names) {
  json doc;
  doc["n"] = g.n();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (!names.empty()) doc["names"] = names;
  return doc.dump();
}

ElimTree parse_tree(std::string_view text) {
  const json doc = parse_json(text, "tree file");
  if (!doc.is_object() || !doc.contains("parent") || !doc["parent"].is_array()) {
    throw Error(ErrorCode::ParseError, "tree file needs an array field \"parent\"");
  }
  std::vector<VertexId> parent;
  for (const auto& p : doc["parent"]) {
    if (!p.is_number_integer()) throw Error(ErrorCode::ParseError, "parent entries must be integers");
    parent.push_back(p.get<VertexId>());
  }
  return ElimTree::from_parents(std::move(parent));
}

ElimTree read_tree(const std::filesystem::path& path) { return parse_tree(read_text(path)); }

std::string dump_tree(const ElimTree& t) { return json{{"parent", t.parents()}}.dump(); }

json flip_graph_json(const FlipGraph& fg) {
  json nodes = json::array();
  for (const ElimTree& t : fg.nodes) nodes.push_back(t.parents());
  return json{{"nodes", std::move(nodes)}, {"adjacency", fg.adjacency}};
}

json explain_json(const fpt::Result& r) {
  json doc;
  doc["verdict"] = r.yes ? "YES" : "NO";
  doc["identical"] = r.identical;
  json witness = json::array();
  for (RotationEdge e : r.witness) witness.push_back({e.parent, e.child});
  doc["witness"] = std::move(witness);
  doc["early_no"] = r.early_no ? json(std::string(fpt::to_string(*r.early_no))) : json(nullptr);
  doc["children_bad"] = r.badness.children_bad;
  doc["parent_bad"] = r.badness.parent_bad;
  doc["bcb"] = {{"radius", r.ball.radius}, {"vertices", r.ball.vertices}};

  json comps = json::array();
  for (std::size_t i = 0; i < r.comps.size(); ++i) {
    const fpt::Component& z = r.comps[i];
    json c;
    c["zroot"] = z.zroot();
    c["size"] = z.size();
    c["diameter"] = z.diameter();
    if (i < r.vertex_types.size()) {
      json types = json::object();
      for (VertexId v : z.vertices()) types[std::to_string(v)] = r.vertex_types[i].at(v);
      c["types"] = std::move(types);
    }
    if (i < r.marks.per_component.size()) c["marked"] = r.marks.per_component[i];
    comps.push_back(std::move(c));
  }
  doc["components"] = std::move(comps);
  doc["type_count"] = r.types.size();
  doc["premarked"] = r.marks.premarked;
  doc["marked"] = r.marks.marked;
  doc["search"] = {{"nodes_expanded", r.stats.nodes_expanded},
                   {"memo_hits", r.stats.memo_hits},
                   {"bound_prunes", r.stats.bound_prunes}};
  return doc;
}

}  // namespace elimtree::io
