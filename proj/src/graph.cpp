#include "elimtree/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "elimtree/error.hpp"
#include "elimtree/random.hpp"

namespace elimtree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::NotATreeEdge: return "NotATreeEdge";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotInComponent: return "NotInComponent";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Graph Graph::from_edge_list(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges) {
  if (n < 0) {
    throw Error(ErrorCode::InvalidParameter, "negative vertex count");
  }
  Graph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::InvalidVertex, "edge (" + std::to_string(u) + "," +
                                                std::to_string(v) + ") has an endpoint outside [0," +
                                                std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t half_edges = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    half_edges += adj.size();
  }
  g.edge_count_ = half_edges / 2;
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < n(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  const VertexId start = 0;
  return ball(g, std::span(&start, 1), g.n()).size() == static_cast<std::size_t>(g.n());
}

std::vector<VertexId> ball(const Graph& g, std::span<const VertexId> seeds, int radius) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::deque<VertexId> queue;
  for (VertexId s : seeds) {
    if (!g.contains(s)) {
      throw Error(ErrorCode::InvalidVertex, "ball seed " + std::to_string(s) + " out of range");
    }
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (dist[v] == radius) continue;
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (dist[v] >= 0) out.push_back(v);
  }
  return out;
}

Family parse_family(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "star") return Family::Star;
  if (name == "complete") return Family::Complete;
  if (name == "complete_split") return Family::CompleteSplit;
  if (name == "random_connected") return Family::RandomConnected;
  throw Error(ErrorCode::InvalidParameter, "unknown graph family '" + name + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Complete: return "complete";
    case Family::CompleteSplit: return "complete_split";
    case Family::RandomConnected: return "random_connected";
  }
  return "unknown";
}

Graph generate(Family family, VertexId n, const GeneratorParams& params) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidParameter, "graph families need n >= 1");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  switch (family) {
    case Family::Path:
      for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::Cycle:
      if (n < 3) throw Error(ErrorCode::InvalidParameter, "cycle needs n >= 3");
      for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      break;
    case Family::Star:
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::Complete:
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Family::CompleteSplit: {
      const VertexId c = params.clique_size;
      if (c < 1 || c > n) {
        throw Error(ErrorCode::InvalidParameter, "complete_split needs 1 <= clique_size <= n");
      }
      for (VertexId u = 0; u < c; ++u) {
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    }
    case Family::RandomConnected: {
      const double p = params.edge_probability;
      if (p < 0.0 || p > 1.0) {
        throw Error(ErrorCode::InvalidParameter, "edge_probability must lie in [0,1]");
      }
      Rng rng(params.seed);
      std::vector<VertexId> perm(static_cast<std::size_t>(n));
      for (VertexId v = 0; v < n; ++v) perm[v] = v;
      rng.shuffle(std::span(perm));
      // Random recursive tree over a shuffled labelling keeps it connected.
      for (VertexId i = 1; i < n; ++i) {
        edges.emplace_back(perm[i], perm[rng.range<VertexId>(0, i - 1)]);
      }
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
          if (rng.unit() < p) edges.emplace_back(u, v);
        }
      }
      break;
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace elimtree
