#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "elimtree/elim_tree.hpp"
#include "elimtree/graph.hpp"

namespace elimtree {

using TreeKey = std::vector<VertexId>;

inline TreeKey tree_key(const ElimTree& t) { return t.parents(); }

inline constexpr VertexId kDefaultEnumerationCap = 10;
// Above this size an exact BFS must be given an explicit depth cap.
inline constexpr VertexId kUncappedBfsLimit = 12;

struct Neighbor {
  RotationEdge edge;
  ElimTree tree;
};

/// One entry per tree edge, in child-id order.
std::vector<Neighbor> neighbors(const Graph& g, const ElimTree& t);

/// Skeleton of the graph associahedron: every elimination tree of G, with an
/// arc for each single rotation. Node 0 is the tree of the identity ordering.
struct FlipGraph {
  std::vector<ElimTree> nodes;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted, symmetric
  std::unordered_map<TreeKey, std::size_t, TreeKeyHash> index;

  std::size_t size() const noexcept { return nodes.size(); }
  std::optional<std::size_t> find(const ElimTree& t) const;
  /// Hop distances from `source` to every node.
  std::vector<int> distances_from(std::size_t source) const;
};

/// Throws InstanceTooLarge when g.n() > max_n, DisconnectedGraph if g is
/// not connected.
FlipGraph enumerate_all(const Graph& g, VertexId max_n = kDefaultEnumerationCap);

/// Exact rotation distance, or nullopt when it exceeds `cap`. Without a cap,
/// graphs larger than kUncappedBfsLimit are refused with InstanceTooLarge.
std::optional<int> bfs_distance(const Graph& g, const ElimTree& from, const ElimTree& to,
                                std::optional<int> cap = std::nullopt);

/// A shortest rotation sequence, or nullopt when longer than `cap`.
std::optional<RotationSequence> bfs_path(const Graph& g, const ElimTree& from,
                                         const ElimTree& to, std::optional<int> cap = std::nullopt);

/// Shortest distance using only rotations whose two endpoints lie in
/// `allowed`; nullopt if no such sequence of length <= cap exists.
std::optional<int> restricted_bfs_distance(const Graph& g, const ElimTree& from,
                                           const ElimTree& to,
                                           std::span<const VertexId> allowed, int cap);

/// Largest rotation distance between two elimination trees of g.
int diameter(const Graph& g, VertexId max_n = kDefaultEnumerationCap);

/// DOT rendering; nodes are labelled with their parent vectors (vertex names
/// substituted when given).
std::string to_dot(const FlipGraph& fg, std::span<const std::string> names = {});

}  // namespace elimtree
