#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "elimtree/elim_tree.hpp"
#include "elimtree/graph.hpp"

// Decision procedure for "rotation distance <= k" that runs in f(k)*|V(G)|
// time. Rotations are confined to a bounded-size marked set M, found by
// typing the vertices of the balls around the vertices whose children differ
// and keeping k+1 representatives of every type among siblings.
namespace elimtree::fpt {

struct BadnessReport {
  std::vector<VertexId> children_bad;  // sorted
  std::vector<VertexId> parent_bad;    // sorted

  bool empty() const noexcept { return children_bad.empty() && parent_bad.empty(); }
};

BadnessReport classify_bad(const ElimTree& t, const ElimTree& target);

// Ball radius used around the children-bad vertices and the root. One more
// than the minimum 2k so that the leaves of every component are never
// rotated by a sequence restricted to the ball.
constexpr int ball_radius(int k) noexcept { return 2 * k + 1; }

struct Ball {
  std::vector<VertexId> vertices;  // sorted
  int radius = 0;
};

/// N_T^{2k+1}[C ∪ {root(T)}], distances measured in t.
Ball compute_bcb(const ElimTree& t, const BadnessReport& report, int k);

/// One connected component Z of the forest t[ball].
class Component {
 public:
  Component(const ElimTree& t, VertexId zroot, std::span<const char> in_ball);

  VertexId zroot() const noexcept { return vertices_.front(); }
  /// Breadth-first from zroot.
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool contains(VertexId v) const { return position_.contains(v); }
  /// children(Z, v), sorted. v must belong to the component.
  std::span<const VertexId> children(VertexId v) const;
  VertexId parent(VertexId v) const;  // kNoParent for zroot
  int depth(VertexId v) const;        // dist_T(v, zroot)
  bool is_leaf(VertexId v) const { return children(v).empty(); }
  int diameter() const noexcept { return diameter_; }

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<VertexId> parent_;
  std::vector<int> depth_;
  std::unordered_map<VertexId, std::size_t> position_;
  int diameter_ = 0;
};

/// Components of t[ball], ordered by zroot id.
std::vector<Component> components(const ElimTree& t, const Ball& ball);

enum class EarlyNo { TooManyChildrenBad, TooManyComponents };
std::string_view to_string(EarlyNo reason);

/// NO when more than 3k vertices are children-bad (one rotation changes at
/// most three children sets), or when more than k components of t[ball]
/// contain a bad vertex (each needs its own rotation).
std::optional<EarlyNo> check_early_no(const BadnessReport& report,
                                      std::span<const Component> comps, int k);

/// Bit i-1 is set iff some vertex of the full subtree T(v) is G-adjacent to
/// the ancestor of v at tree distance i, for i = 1..dist_T(v, zroot).
using Trace = std::vector<std::uint8_t>;

Trace trace_of(const Graph& g, const ElimTree& t, const Component& z, VertexId v);

struct WantParent {
  enum class Kind : std::uint8_t { Same, Want, WantRoot };
  Kind kind = Kind::Same;
  VertexId parent = kNoParent;  // meaningful for Want only

  friend bool operator==(const WantParent&, const WantParent&) = default;
};

WantParent want_parent(const ElimTree& t, const ElimTree& target, VertexId v);

using TypeId = std::uint32_t;

struct TypeRecord {
  WantParent want;
  Trace trace;
  // (child type, min(k+1, multiplicity)) sorted by type; empty for leaves of Z.
  std::vector<std::pair<TypeId, int>> child_counts;

  friend bool operator==(const TypeRecord&, const TypeRecord&) = default;
};

/// Interns type records. Ids are handed out in first-seen order.
class TypeTable {
 public:
  TypeId intern(const TypeRecord& record);
  const TypeRecord& record(TypeId id) const { return records_.at(id); }
  std::size_t size() const noexcept { return records_.size(); }

 private:
  std::vector<TypeRecord> records_;
  std::unordered_map<std::string, TypeId> ids_;
};

using TypeMap = std::unordered_map<VertexId, TypeId>;

/// Type of v in z. All Z-children of v must already be in `types`
/// (OrderViolation otherwise). Records the result in `types`.
TypeId type_of(const Graph& g, const ElimTree& t, const ElimTree& target, const Component& z,
               int k, TypeTable& table, TypeMap& types, VertexId v);

/// Types every vertex of z bottom-up.
TypeMap type_component(const Graph& g, const ElimTree& t, const ElimTree& target,
                       const Component& z, int k, TypeTable& table);

/// Per vertex and per child type: all children of that type if at most k+1,
/// otherwise the k+1 with the lowest ids. zroot is always included.
std::vector<VertexId> premark(const Component& z, const TypeMap& types, int k);

/// Top-down closure of the premarked set from zroot, plus every
/// children-bad vertex of z together with its Z-ancestors.
std::vector<VertexId> mark(const Component& z, std::span<const VertexId> premarked,
                           const BadnessReport& report);

struct MarkedSet {
  std::vector<VertexId> premarked;                   // sorted, all components
  std::vector<VertexId> marked;                      // sorted, all components
  std::vector<std::vector<VertexId>> per_component;  // M_Z, parallel to components
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t bound_prunes = 0;
};

struct Options {
  int jobs = 1;              // worker hint for the top-level fan-out
  bool lower_bound = true;   // prune with ceil(|children-bad| / 3)
};

struct Result {
  bool yes = false;
  RotationSequence witness;
  std::optional<EarlyNo> early_no;
  bool identical = false;  // source == target, decided before any analysis
  BadnessReport badness;
  Ball ball;
  std::vector<Component> comps;
  TypeTable types;
  std::vector<TypeMap> vertex_types;  // parallel to comps
  MarkedSet marks;
  SearchStats stats;
};

/// Decides dist(t, target) <= k. A YES carries a shortest witness that uses
/// only marked vertices. k = 0 is answered by equality. Throws
/// DisconnectedGraph, InvalidTree (size mismatch) or InvalidParameter (k < 0).
Result decide(const Graph& g, const ElimTree& t, const ElimTree& target, int k,
              const Options& options = {});

/// Search over rotations whose endpoints both lie in `allowed`, iterative
/// deepening up to k. Exposed for testing the restriction on its own.
std::optional<RotationSequence> restricted_search(const Graph& g, const ElimTree& t,
                                                  const ElimTree& target,
                                                  std::span<const VertexId> allowed, int k,
                                                  const Options& options, SearchStats& stats);

}  // namespace elimtree::fpt
