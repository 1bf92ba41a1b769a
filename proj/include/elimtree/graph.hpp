#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace elimtree {

using VertexId = std::int32_t;

/// Immutable simple undirected graph on the dense vertex set [0, n).
///
/// Adjacency lists are sorted and duplicate-free, so every traversal order
/// derived from a Graph is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) are collapsed. Throws InvalidVertex for an endpoint outside
  /// [0, n) and SelfLoop for an edge (v, v).
  static Graph from_edge_list(VertexId n,
                              std::span<const std::pair<VertexId, VertexId>> edges);

  VertexId n() const noexcept { return static_cast<VertexId>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool has_edge(VertexId u, VertexId v) const;
  bool contains(VertexId v) const noexcept { return v >= 0 && v < n(); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);

/// N^r[seeds]: every vertex within distance r of some seed, seeds included.
/// Distances are measured in `g`. Result is sorted.
std::vector<VertexId> ball(const Graph& g, std::span<const VertexId> seeds, int radius);

enum class Family { Path, Cycle, Star, Complete, CompleteSplit, RandomConnected };

struct GeneratorParams {
  // CompleteSplit: vertices [0, clique_size) form a clique, the rest an
  // independent set joined to every clique vertex.
  VertexId clique_size = 1;
  // RandomConnected: random spanning tree plus each remaining pair with
  // probability edge_probability.
  double edge_probability = 0.3;
  std::uint64_t seed = 0;
};

Family parse_family(const std::string& name);
std::string_view to_string(Family family);

/// Deterministic generators; RandomConnected is reproducible from `seed`.
/// Star uses vertex 0 as the center.
Graph generate(Family family, VertexId n, const GeneratorParams& params = {});

}  // namespace elimtree
