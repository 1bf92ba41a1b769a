#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "elimtree/graph.hpp"

namespace elimtree {

inline constexpr VertexId kNoParent = -1;

/// A rotatable tree edge: `parent` must be the parent of `child` in the tree
/// the edge is applied to.
struct RotationEdge {
  VertexId parent = kNoParent;
  VertexId child = kNoParent;

  friend auto operator<=>(const RotationEdge&, const RotationEdge&) = default;
};

using RotationSequence = std::vector<RotationEdge>;

/// Rooted, unordered tree on [0, n) stored as a parent vector.
///
/// The parent vector is the identity of the tree; the sorted children lists
/// are an index derived from it. Values are immutable once constructed.
class ElimTree {
 public:
  ElimTree() = default;

  /// Throws InvalidTree unless `parent` describes a single rooted tree
  /// (exactly one kNoParent entry, all others in range, no cycles).
  static ElimTree from_parents(std::vector<VertexId> parent);

  VertexId n() const noexcept { return static_cast<VertexId>(parent_.size()); }
  VertexId root() const noexcept { return root_; }
  VertexId parent(VertexId v) const { return parent_[v]; }
  std::span<const VertexId> children(VertexId v) const { return children_[v]; }
  const std::vector<VertexId>& parents() const noexcept { return parent_; }

  /// Distance from the root (root has depth 0).
  std::vector<int> depths() const;
  /// Vertices in breadth-first order from the root; every vertex appears
  /// after its parent.
  std::vector<VertexId> bfs_order() const;
  /// Vertices of T(v), v first, in preorder.
  std::vector<VertexId> subtree(VertexId v) const;
  bool is_ancestor(VertexId ancestor, VertexId v) const;  // reflexive
  bool has_edge(RotationEdge e) const;
  /// Tree edges (parent(v), v), ordered by child id.
  std::vector<RotationEdge> edges() const;

  /// The tree viewed as an undirected graph on [0, n).
  Graph to_graph() const;

  friend bool operator==(const ElimTree& a, const ElimTree& b) { return a.parent_ == b.parent_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> children_;
  VertexId root_ = kNoParent;

  friend ElimTree rotate(const Graph& g, const ElimTree& t, RotationEdge e);
};

/// Realizes an elimination ordering: the first vertex of `order` in each
/// component becomes that component's root, recursively. Throws
/// DisconnectedGraph or InvalidOrdering.
ElimTree from_ordering(const Graph& g, std::span<const VertexId> order);

struct Validation {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that `t` is an elimination tree of `g`: every G-edge joins an
/// ancestor/descendant pair and every subtree induces a connected subgraph.
Validation validate(const Graph& g, const ElimTree& t);

/// rot(t, e). Throws NotATreeEdge if e.parent is not the parent of e.child.
ElimTree rotate(const Graph& g, const ElimTree& t, RotationEdge e);

/// Applies the edges in order. Throws NotATreeEdgeError carrying the 1-based
/// index of the first edge absent from the intermediate tree.
ElimTree apply_sequence(const Graph& g, const ElimTree& t, std::span<const RotationEdge> seq);

inline bool equals(const ElimTree& a, const ElimTree& b) { return a == b; }

/// Children-set equality per vertex; the parent-vector comparison is the
/// cheaper equivalent, this is used where per-vertex answers are needed.
bool same_children(const ElimTree& a, const ElimTree& b, VertexId v);

std::string format_edge(RotationEdge e);
std::string format_sequence(std::span<const RotationEdge> seq);
/// Parses every `u->v` token in `text`; other text is ignored.
RotationSequence parse_sequence(const std::string& text);

struct TreeKeyHash {
  std::size_t operator()(const std::vector<VertexId>& key) const noexcept;
};

}  // namespace elimtree
