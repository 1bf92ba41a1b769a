#include "elimtree/elim_tree.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>
#include <string>

#include "elimtree/error.hpp"

namespace elimtree {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  VertexId find(VertexId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns the surviving representative.
  VertexId unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[b] = a;
    return a;
  }

 private:
  std::vector<VertexId> parent_;
};

std::string edge_text(VertexId u, VertexId v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

// Does some vertex of T(w) have `u` as a G-neighbour?
bool subtree_touches(const Graph& g, const ElimTree& t, VertexId w, VertexId u) {
  std::vector<VertexId> stack{w};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    if (g.has_edge(x, u)) return true;
    for (VertexId c : t.children(x)) stack.push_back(c);
  }
  return false;
}

}  // namespace

ElimTree ElimTree::from_parents(std::vector<VertexId> parent) {
  const auto n = static_cast<VertexId>(parent.size());
  if (n == 0) {
    throw Error(ErrorCode::InvalidTree, "tree has no vertices");
  }
  ElimTree t;
  t.children_.resize(parent.size());
  for (VertexId v = 0; v < n; ++v) {
    const VertexId p = parent[v];
    if (p == kNoParent) {
      if (t.root_ != kNoParent) {
        throw Error(ErrorCode::InvalidTree, "vertices " + std::to_string(t.root_) + " and " +
                                                std::to_string(v) + " are both roots");
      }
      t.root_ = v;
    } else if (p < 0 || p >= n || p == v) {
      throw Error(ErrorCode::InvalidTree,
                  "vertex " + std::to_string(v) + " has invalid parent " + std::to_string(p));
    } else {
      t.children_[p].push_back(v);
    }
  }
  if (t.root_ == kNoParent) {
    throw Error(ErrorCode::InvalidTree, "tree has no root");
  }
  // children_ lists are already sorted since v is increasing.
  t.parent_ = std::move(parent);
  if (t.bfs_order().size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidTree, "parent relation contains a cycle");
  }
  return t;
}

std::vector<int> ElimTree::depths() const {
  std::vector<int> depth(parent_.size(), 0);
  for (VertexId v : bfs_order()) {
    if (parent_[v] != kNoParent) depth[v] = depth[parent_[v]] + 1;
  }
  return depth;
}

std::vector<VertexId> ElimTree::bfs_order() const {
  std::vector<VertexId> order;
  order.reserve(parent_.size());
  order.push_back(root_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId c : children_[order[i]]) order.push_back(c);
  }
  return order;
}

std::vector<VertexId> ElimTree::subtree(VertexId v) const {
  std::vector<VertexId> out;
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    out.push_back(x);
    const auto& ch = children_[x];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

bool ElimTree::is_ancestor(VertexId ancestor, VertexId v) const {
  for (VertexId x = v; x != kNoParent; x = parent_[x]) {
    if (x == ancestor) return true;
  }
  return false;
}

bool ElimTree::has_edge(RotationEdge e) const {
  return e.child >= 0 && e.child < n() && e.parent != kNoParent && parent_[e.child] == e.parent;
}

std::vector<RotationEdge> ElimTree::edges() const {
  std::vector<RotationEdge> out;
  out.reserve(parent_.size());
  for (VertexId v = 0; v < n(); ++v) {
    if (parent_[v] != kNoParent) out.push_back({parent_[v], v});
  }
  return out;
}

Graph ElimTree::to_graph() const {
  std::vector<std::pair<VertexId, VertexId>> e;
  e.reserve(parent_.size());
  for (VertexId v = 0; v < n(); ++v) {
    if (parent_[v] != kNoParent) e.emplace_back(parent_[v], v);
  }
  return Graph::from_edge_list(n(), e);
}

ElimTree from_ordering(const Graph& g, std::span<const VertexId> order) {
  const VertexId n = g.n();
  if (static_cast<VertexId>(order.size()) != n) {
    throw Error(ErrorCode::InvalidOrdering, "ordering has " + std::to_string(order.size()) +
                                                " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (VertexId v : order) {
    if (!g.contains(v) || seen[v]) {
      throw Error(ErrorCode::InvalidOrdering, "ordering is not a permutation of the vertices");
    }
    seen[v] = 1;
  }
  if (!is_connected(g)) {
    throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  }
  // Insert vertices latest-first; each new vertex adopts the current tops of
  // the already-inserted components it touches.
  std::vector<VertexId> parent(static_cast<std::size_t>(n), kNoParent);
  std::vector<VertexId> top(static_cast<std::size_t>(n), kNoParent);
  std::vector<char> inserted(static_cast<std::size_t>(n), 0);
  DisjointSets sets(static_cast<std::size_t>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    for (VertexId w : g.neighbors(v)) {
      if (!inserted[w]) continue;
      const VertexId rep = sets.find(w);
      if (rep == sets.find(v)) continue;
      parent[top[rep]] = v;
      sets.unite(v, rep);
    }
    inserted[v] = 1;
    top[sets.find(v)] = v;
  }
  return ElimTree::from_parents(std::move(parent));
}

Validation validate(const Graph& g, const ElimTree& t) {
  if (t.n() != g.n()) {
    return {false, "tree has " + std::to_string(t.n()) + " vertices, graph has " +
                       std::to_string(g.n())};
  }
  const auto n = static_cast<std::size_t>(g.n());
  // Preorder intervals: x is in T(v) iff tin[v] <= tin[x] < tout[v].
  std::vector<int> tin(n), tout(n);
  {
    int clock = 0;
    std::vector<std::pair<VertexId, bool>> stack{{t.root(), false}};
    while (!stack.empty()) {
      auto [v, done] = stack.back();
      stack.pop_back();
      if (done) {
        tout[v] = clock;
        continue;
      }
      tin[v] = clock++;
      stack.push_back({v, true});
      const auto ch = t.children(v);
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, false});
    }
  }
  auto inside = [&](VertexId x, VertexId v) { return tin[v] <= tin[x] && tin[x] < tout[v]; };

  for (auto [u, v] : g.edges()) {
    if (!inside(u, v) && !inside(v, u)) {
      return {false, "edge " + edge_text(u, v) + " joins two vertices neither of which is an "
                     "ancestor of the other"};
    }
  }
  // With the ancestor property, T(p) is connected for every p iff each child
  // subtree T(c) has a G-neighbour at p. Children are visited in list order,
  // so their tin values increase along children(p).
  for (VertexId p = 0; p < g.n(); ++p) {
    const auto ch = t.children(p);
    std::vector<char> touched(ch.size(), 0);
    for (VertexId y : g.neighbors(p)) {
      if (y == p || !inside(y, p)) continue;
      auto it = std::upper_bound(ch.begin(), ch.end(), tin[y],
                                 [&](int value, VertexId c) { return value < tin[c]; });
      if (it == ch.begin()) continue;
      --it;
      if (inside(y, *it)) touched[static_cast<std::size_t>(it - ch.begin())] = 1;
    }
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (!touched[i]) {
        return {false, "subtree of vertex " + std::to_string(p) +
                           " does not induce a connected subgraph: T(" + std::to_string(ch[i]) +
                           ") has no neighbour at " + std::to_string(p)};
      }
    }
  }
  return {};
}

ElimTree rotate(const Graph& g, const ElimTree& t, RotationEdge e) {
  if (!t.has_edge(e)) {
    throw Error(ErrorCode::NotATreeEdge,
                format_edge(e) + " is not a parent->child edge of the tree");
  }
  const VertexId u = e.parent;
  const VertexId v = e.child;
  const VertexId z = t.parent(u);

  ElimTree out = t;
  std::vector<VertexId> moved;
  std::vector<VertexId> stay{u};
  for (VertexId w : t.children(v)) {
    (subtree_touches(g, t, w, u) ? moved : stay).push_back(w);
  }

  out.parent_[v] = z;
  out.parent_[u] = v;
  for (VertexId w : moved) out.parent_[w] = u;
  if (z == kNoParent) {
    out.root_ = v;
  } else {
    auto& zc = out.children_[z];
    *std::find(zc.begin(), zc.end(), u) = v;
    std::sort(zc.begin(), zc.end());
  }

  auto& uc = out.children_[u];
  uc.erase(std::find(uc.begin(), uc.end(), v));
  uc.insert(uc.end(), moved.begin(), moved.end());
  std::sort(uc.begin(), uc.end());

  std::sort(stay.begin(), stay.end());
  out.children_[v] = std::move(stay);
  return out;
}

ElimTree apply_sequence(const Graph& g, const ElimTree& t, std::span<const RotationEdge> seq) {
  ElimTree cur = t;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!cur.has_edge(seq[i])) {
      throw NotATreeEdgeError(i + 1, "rotation " + std::to_string(i + 1) + " (" +
                                         format_edge(seq[i]) +
                                         ") is not an edge of the intermediate tree");
    }
    cur = rotate(g, cur, seq[i]);
  }
  return cur;
}

bool same_children(const ElimTree& a, const ElimTree& b, VertexId v) {
  const auto ca = a.children(v);
  const auto cb = b.children(v);
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::string format_edge(RotationEdge e) {
  return std::to_string(e.parent) + "->" + std::to_string(e.child);
}

std::string format_sequence(std::span<const RotationEdge> seq) {
  std::ostringstream out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ' ';
    out << format_edge(seq[i]);
  }
  return out.str();
}

RotationSequence parse_sequence(const std::string& text) {
  static const std::regex pair_re(R"((-?\d+)\s*->\s*(-?\d+))");
  RotationSequence seq;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pair_re);
       it != std::sregex_iterator(); ++it) {
    seq.push_back({static_cast<VertexId>(std::stol((*it)[1].str())),
                   static_cast<VertexId>(std::stol((*it)[2].str()))});
  }
  return seq;
}

std::size_t TreeKeyHash::operator()(const std::vector<VertexId>& key) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (VertexId x : key) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace elimtree
