#include "elimtree/flip_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "elimtree/error.hpp"

namespace elimtree {

namespace {

using KeySet = std::unordered_set<TreeKey, TreeKeyHash>;
using KeyDist = std::unordered_map<TreeKey, int, TreeKeyHash>;

void require_size(const Graph& g, const ElimTree& a, const ElimTree& b) {
  if (a.n() != g.n() || b.n() != g.n()) {
    throw Error(ErrorCode::InvalidTree, "tree and graph sizes differ");
  }
}

}  // namespace

std::vector<Neighbor> neighbors(const Graph& g, const ElimTree& t) {
  std::vector<Neighbor> out;
  for (RotationEdge e : t.edges()) out.push_back({e, rotate(g, t, e)});
  return out;
}

std::optional<std::size_t> FlipGraph::find(const ElimTree& t) const {
  auto it = index.find(tree_key(t));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FlipGraph::distances_from(std::size_t source) const {
  std::vector<int> dist(nodes.size(), -1);
  std::vector<std::size_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t y : adjacency[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

FlipGraph enumerate_all(const Graph& g, VertexId max_n) {
  if (g.n() > max_n) {
    throw Error(ErrorCode::InstanceTooLarge, "enumeration refused: n = " + std::to_string(g.n()) +
                                                 " exceeds the cap of " + std::to_string(max_n));
  }
  std::vector<VertexId> identity(static_cast<std::size_t>(g.n()));
  std::iota(identity.begin(), identity.end(), 0);
  FlipGraph fg;
  fg.nodes.push_back(from_ordering(g, identity));
  fg.index.emplace(tree_key(fg.nodes.front()), 0);
  for (std::size_t head = 0; head < fg.nodes.size(); ++head) {
    std::vector<std::size_t> adj;
    for (RotationEdge e : fg.nodes[head].edges()) {
      ElimTree next = rotate(g, fg.nodes[head], e);
      auto [it, inserted] = fg.index.try_emplace(tree_key(next), fg.nodes.size());
      if (inserted) fg.nodes.push_back(std::move(next));
      adj.push_back(it->second);
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    fg.adjacency.push_back(std::move(adj));
  }
  return fg;
}

std::optional<int> bfs_distance(const Graph& g, const ElimTree& from, const ElimTree& to,
                                std::optional<int> cap) {
  require_size(g, from, to);
  if (!cap && g.n() > kUncappedBfsLimit) {
    throw Error(ErrorCode::InstanceTooLarge,
                "exact BFS on n > " + std::to_string(kUncappedBfsLimit) + " needs a depth cap");
  }
  if (from == to) return 0;
  const int limit = cap.value_or(std::numeric_limits<int>::max());

  // Bidirectional search: the first meeting found while expanding a full
  // layer is a shortest path, since no meeting occurred one layer earlier.
  struct Side {
    KeyDist seen;
    std::vector<ElimTree> frontier;
    int depth = 0;
  };
  Side a, b;
  a.seen.emplace(tree_key(from), 0);
  a.frontier.push_back(from);
  b.seen.emplace(tree_key(to), 0);
  b.frontier.push_back(to);

  while (!a.frontier.empty() && !b.frontier.empty()) {
    if (a.depth + b.depth + 1 > limit) return std::nullopt;
    Side& grow = a.frontier.size() <= b.frontier.size() ? a : b;
    const Side& other = &grow == &a ? b : a;
    std::vector<ElimTree> next;
    for (const ElimTree& t : grow.frontier) {
      for (RotationEdge e : t.edges()) {
        ElimTree n = rotate(g, t, e);
        TreeKey key = tree_key(n);
        if (auto hit = other.seen.find(key); hit != other.seen.end()) {
          return grow.depth + 1 + hit->second;
        }
        if (grow.seen.emplace(std::move(key), grow.depth + 1).second) next.push_back(std::move(n));
      }
    }
    grow.frontier = std::move(next);
    ++grow.depth;
  }
  return std::nullopt;
}

std::optional<RotationSequence> bfs_path(const Graph& g, const ElimTree& from, const ElimTree& to,
                                         std::optional<int> cap) {
  require_size(g, from, to);
  if (!cap && g.n() > kUncappedBfsLimit) {
    throw Error(ErrorCode::InstanceTooLarge,
                "exact BFS on n > " + std::to_string(kUncappedBfsLimit) + " needs a depth cap");
  }
  const int limit = cap.value_or(std::numeric_limits<int>::max());
  struct Visit {
    std::size_t prev;
    RotationEdge edge;
    int depth;
  };
  std::vector<ElimTree> trees{from};
  std::vector<Visit> visits{{0, {}, 0}};
  KeySet seen{tree_key(from)};
  for (std::size_t head = 0; head < trees.size(); ++head) {
    if (trees[head] == to) {
      RotationSequence seq;
      for (std::size_t x = head; x != 0; x = visits[x].prev) seq.push_back(visits[x].edge);
      std::reverse(seq.begin(), seq.end());
      return seq;
    }
    if (visits[head].depth == limit) continue;
    for (RotationEdge e : trees[head].edges()) {
      ElimTree n = rotate(g, trees[head], e);
      if (seen.insert(tree_key(n)).second) {
        trees.push_back(std::move(n));
        visits.push_back({head, e, visits[head].depth + 1});
      }
    }
  }
  return std::nullopt;
}

std::optional<int> restricted_bfs_distance(const Graph& g, const ElimTree& from,
                                           const ElimTree& to,
                                           std::span<const VertexId> allowed, int cap) {
  require_size(g, from, to);
  std::vector<char> ok(static_cast<std::size_t>(g.n()), 0);
  for (VertexId v : allowed) {
    if (!g.contains(v)) throw Error(ErrorCode::InvalidVertex, "allowed vertex out of range");
    ok[v] = 1;
  }
  if (from == to) return 0;
  KeySet seen{tree_key(from)};
  std::vector<ElimTree> frontier{from};
  for (int depth = 1; depth <= cap && !frontier.empty(); ++depth) {
    std::vector<ElimTree> next;
    for (const ElimTree& t : frontier) {
      for (RotationEdge e : t.edges()) {
        if (!ok[e.parent] || !ok[e.child]) continue;
        ElimTree n = rotate(g, t, e);
        if (n == to) return depth;
        if (seen.insert(tree_key(n)).second) next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

int diameter(const Graph& g, VertexId max_n) {
  const FlipGraph fg = enumerate_all(g, max_n);
  int best = 0;
  for (std::size_t s = 0; s < fg.size(); ++s) {
    const auto dist = fg.distances_from(s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::string to_dot(const FlipGraph& fg, std::span<const std::string> names) {
  auto label = [&](const ElimTree& t) {
    std::ostringstream out;
    out << '[';
    for (VertexId v = 0; v < t.n(); ++v) {
      if (v) out << ',';
      const VertexId p = t.parent(v);
      if (names.empty()) {
        out << p;
      } else {
        out << (p == kNoParent ? std::string("-") : names[p]);
      }
    }
    out << ']';
    return out.str();
  };
  std::ostringstream out;
  out << "graph flip_graph {\n";
  for (std::size_t i = 0; i < fg.size(); ++i) {
    out << "  n" << i << " [label=\"" << label(fg.nodes[i]) << "\"];\n";
  }
  for (std::size_t i = 0; i < fg.size(); ++i) {
    for (std::size_t j : fg.adjacency[i]) {
      if (i < j) out << "  n" << i << " -- n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace elimtree
