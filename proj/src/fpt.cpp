#include "elimtree/fpt.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>

#include "elimtree/error.hpp"
#include "elimtree/flip_graph.hpp"

namespace elimtree::fpt {

BadnessReport classify_bad(const ElimTree& t, const ElimTree& target) {
  if (t.n() != target.n()) {
    throw Error(ErrorCode::InvalidTree, "trees have different vertex counts");
  }
  BadnessReport r;
  for (VertexId v = 0; v < t.n(); ++v) {
    if (!same_children(t, target, v)) r.children_bad.push_back(v);
    if (t.parent(v) != target.parent(v)) r.parent_bad.push_back(v);
  }
  return r;
}

Ball compute_bcb(const ElimTree& t, const BadnessReport& report, int k) {
  std::vector<VertexId> seeds = report.children_bad;
  seeds.push_back(t.root());
  Ball b;
  b.radius = ball_radius(k);
  b.vertices = ball(t.to_graph(), seeds, b.radius);
  return b;
}

Component::Component(const ElimTree& t, VertexId zroot, std::span<const char> in_ball) {
  vertices_.push_back(zroot);
  parent_.push_back(kNoParent);
  depth_.push_back(0);
  position_.emplace(zroot, 0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const VertexId v = vertices_[i];
    std::vector<VertexId> kids;
    for (VertexId c : t.children(v)) {
      if (!in_ball[c]) continue;
      kids.push_back(c);
      position_.emplace(c, vertices_.size());
      vertices_.push_back(c);
      parent_.push_back(v);
      depth_.push_back(depth_[i] + 1);
    }
    children_.push_back(std::move(kids));
  }
  // Tree diameter from the two tallest child branches at every vertex.
  std::vector<int> height(vertices_.size(), 0);
  for (std::size_t i = vertices_.size(); i-- > 0;) {
    int first = 0, second = 0;
    for (VertexId c : children_[i]) {
      const int h = height[position_.at(c)] + 1;
      if (h > first) {
        second = first;
        first = h;
      } else if (h > second) {
        second = h;
      }
    }
    height[i] = first;
    diameter_ = std::max(diameter_, first + second);
  }
}

std::span<const VertexId> Component::children(VertexId v) const {
  return children_[position_.at(v)];
}

VertexId Component::parent(VertexId v) const { return parent_[position_.at(v)]; }

int Component::depth(VertexId v) const { return depth_[position_.at(v)]; }

std::vector<Component> components(const ElimTree& t, const Ball& ball) {
  std::vector<char> in_ball(static_cast<std::size_t>(t.n()), 0);
  for (VertexId v : ball.vertices) {
    if (v < 0 || v >= t.n()) throw Error(ErrorCode::InvalidVertex, "ball vertex out of range");
    in_ball[v] = 1;
  }
  std::vector<Component> out;
  for (VertexId v : ball.vertices) {  // sorted, so zroots come out in id order
    const VertexId p = t.parent(v);
    if (p == kNoParent || !in_ball[p]) out.emplace_back(t, v, in_ball);
  }
  return out;
}

std::string_view to_string(EarlyNo reason) {
  switch (reason) {
    case EarlyNo::TooManyChildrenBad: return "too_many_children_bad";
    case EarlyNo::TooManyComponents: return "too_many_components";
  }
  return "unknown";
}

std::optional<EarlyNo> check_early_no(const BadnessReport& report,
                                      std::span<const Component> comps, int k) {
  if (report.children_bad.size() > 3 * static_cast<std::size_t>(k)) {
    return EarlyNo::TooManyChildrenBad;
  }
  int with_bad = 0;
  for (const Component& z : comps) {
    auto hit = [&](const std::vector<VertexId>& set) {
      return std::any_of(set.begin(), set.end(), [&](VertexId v) { return z.contains(v); });
    };
    if (hit(report.children_bad) || hit(report.parent_bad)) ++with_bad;
  }
  if (with_bad > k) return EarlyNo::TooManyComponents;
  return std::nullopt;
}

Trace trace_of(const Graph& g, const ElimTree& t, const Component& z, VertexId v) {
  if (!z.contains(v)) {
    throw Error(ErrorCode::NotInComponent,
                "vertex " + std::to_string(v) + " is not in the component rooted at " +
                    std::to_string(z.zroot()));
  }
  const int len = z.depth(v);
  Trace trace(static_cast<std::size_t>(len), 0);
  if (len == 0) return trace;

  std::unordered_map<VertexId, int> distance_up;
  VertexId a = v;
  for (int i = 1; i <= len; ++i) {
    a = t.parent(a);
    distance_up.emplace(a, i);
  }
  // Any G-neighbour of T(v) outside T(v) is an ancestor of v.
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(x)) {
      if (auto it = distance_up.find(y); it != distance_up.end()) trace[it->second - 1] = 1;
    }
    for (VertexId c : t.children(x)) stack.push_back(c);
  }
  return trace;
}

WantParent want_parent(const ElimTree& t, const ElimTree& target, VertexId v) {
  const VertexId now = t.parent(v);
  const VertexId wanted = target.parent(v);
  if (now == wanted) return {};
  if (wanted == kNoParent) return {WantParent::Kind::WantRoot, kNoParent};
  return {WantParent::Kind::Want, wanted};
}

namespace {

template <typename T>
void append_raw(std::string& out, T value) {
  out.append(reinterpret_cast<const char*>(&value), sizeof(value));
}

std::string canonical_key(const TypeRecord& r) {
  std::string key;
  append_raw(key, static_cast<std::uint8_t>(r.want.kind));
  append_raw(key, r.want.parent);
  append_raw(key, static_cast<std::uint32_t>(r.trace.size()));
  key.append(r.trace.begin(), r.trace.end());
  for (auto [id, count] : r.child_counts) {
    append_raw(key, id);
    append_raw(key, count);
  }
  return key;
}

}  // namespace

TypeId TypeTable::intern(const TypeRecord& record) {
  auto [it, inserted] = ids_.try_emplace(canonical_key(record), static_cast<TypeId>(records_.size()));
  if (inserted) records_.push_back(record);
  return it->second;
}

TypeId type_of(const Graph& g, const ElimTree& t, const ElimTree& target, const Component& z,
               int k, TypeTable& table, TypeMap& types, VertexId v) {
  TypeRecord record;
  record.want = want_parent(t, target, v);
  record.trace = trace_of(g, t, z, v);
  std::map<TypeId, int> counts;
  for (VertexId c : z.children(v)) {
    auto it = types.find(c);
    if (it == types.end()) {
      throw Error(ErrorCode::OrderViolation, "child " + std::to_string(c) + " of vertex " +
                                                 std::to_string(v) + " has not been typed yet");
    }
    auto& n = counts[it->second];
    n = std::min(n + 1, k + 1);
  }
  record.child_counts.assign(counts.begin(), counts.end());
  const TypeId id = table.intern(record);
  types[v] = id;
  return id;
}

TypeMap type_component(const Graph& g, const ElimTree& t, const ElimTree& target,
                       const Component& z, int k, TypeTable& table) {
  TypeMap types;
  const auto order = z.vertices();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    type_of(g, t, target, z, k, table, types, *it);
  }
  return types;
}

std::vector<VertexId> premark(const Component& z, const TypeMap& types, int k) {
  std::vector<VertexId> out{z.zroot()};
  const auto quota = static_cast<std::size_t>(k) + 1;
  for (VertexId v : z.vertices()) {
    std::map<TypeId, std::size_t> taken;
    for (VertexId c : z.children(v)) {  // ascending ids: lowest ids win
      auto& n = taken[types.at(c)];
      if (n < quota) {
        ++n;
        out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> mark(const Component& z, std::span<const VertexId> premarked,
                           const BadnessReport& report) {
  std::unordered_map<VertexId, char> in;
  in[z.zroot()] = 1;
  for (VertexId v : z.vertices()) {  // parents precede children
    if (!in.contains(v)) continue;
    for (VertexId c : z.children(v)) {
      if (std::binary_search(premarked.begin(), premarked.end(), c)) in[c] = 1;
    }
  }
  for (VertexId b : report.children_bad) {
    if (!z.contains(b)) continue;
    for (VertexId a = b; a != kNoParent && !in.contains(a); a = z.parent(a)) in[a] = 1;
  }
  std::vector<VertexId> out;
  out.reserve(in.size());
  for (auto [v, _] : in) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class Searcher {
 public:
  Searcher(const Graph& g, const ElimTree& target, std::span<const char> allowed,
           std::span<const VertexId> candidates, bool lower_bound)
      : g_(g), target_(target), allowed_(allowed), candidates_(candidates),
        lower_bound_(lower_bound) {}

  // Depth-first search for a sequence of at most `budget` rotations.
  bool search(const ElimTree& cur, int budget, RotationSequence& path) {
    if (cur == target_) return true;
    if (budget == 0) return false;
    if (lower_bound_ && bound(cur) > budget) {
      ++stats.bound_prunes;
      return false;
    }
    const TreeKey key = tree_key(cur);
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget) {
      ++stats.memo_hits;
      return false;
    }
    ++stats.nodes_expanded;
    for (RotationEdge e : moves(cur)) {
      path.push_back(e);
      if (search(rotate(g_, cur, e), budget - 1, path)) return true;
      path.pop_back();
    }
    int& worst = failed_[key];
    worst = std::max(worst, budget);
    return false;
  }

  std::vector<RotationEdge> moves(const ElimTree& cur) const {
    std::vector<RotationEdge> out;
    for (VertexId v : candidates_) {
      const VertexId p = cur.parent(v);
      if (p != kNoParent && allowed_[p]) out.push_back({p, v});
    }
    return out;
  }

  SearchStats stats;

 private:
  // A rotation changes at most three children sets.
  int bound(const ElimTree& cur) const {
    int bad = 0;
    for (VertexId v = 0; v < cur.n(); ++v) bad += !same_children(cur, target_, v);
    return (bad + 2) / 3;
  }

  const Graph& g_;
  const ElimTree& target_;
  std::span<const char> allowed_;
  std::span<const VertexId> candidates_;
  bool lower_bound_;
  std::unordered_map<TreeKey, int, TreeKeyHash> failed_;
};

void accumulate(SearchStats& into, const SearchStats& from) {
  into.nodes_expanded += from.nodes_expanded;
  into.memo_hits += from.memo_hits;
  into.bound_prunes += from.bound_prunes;
}

}  // namespace

std::optional<RotationSequence> restricted_search(const Graph& g, const ElimTree& t,
                                                  const ElimTree& target,
                                                  std::span<const VertexId> allowed, int k,
                                                  const Options& options, SearchStats& stats) {
  if (t == target) return RotationSequence{};
  std::vector<char> ok(static_cast<std::size_t>(g.n()), 0);
  std::vector<VertexId> candidates(allowed.begin(), allowed.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (VertexId v : candidates) ok[v] = 1;

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    Searcher s(g, target, ok, candidates, options.lower_bound);
    for (int budget = 1; budget <= k; ++budget) {
      RotationSequence path;
      const bool found = s.search(t, budget, path);
      if (found || budget == k) {
        accumulate(stats, s.stats);
        if (found) return path;
      }
    }
    return std::nullopt;
  }

  // Parallel fan-out over the first move. Each worker owns a memo; the
  // witness reported is the one from the lowest-indexed successful first
  // move, which is what the sequential search would return.
  std::vector<Searcher> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) workers.emplace_back(g, target, ok, candidates, options.lower_bound);
  const auto first_moves = workers.front().moves(t);
  std::optional<RotationSequence> result;
  for (int budget = 1; budget <= k && !result; ++budget) {
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<RotationSequence>> found(first_moves.size());
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < first_moves.size();
             i += static_cast<std::size_t>(jobs)) {
          if (i > best.load()) break;
          RotationSequence path{first_moves[i]};
          if (workers[w].search(rotate(g, t, first_moves[i]), budget - 1, path)) {
            found[i] = std::move(path);
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& f : found) {
      if (f) {
        result = std::move(f);
        break;
      }
    }
  }
  for (const auto& w : workers) accumulate(stats, w.stats);
  return result;
}

Result decide(const Graph& g, const ElimTree& t, const ElimTree& target, int k,
              const Options& options) {
  if (k < 0) throw Error(ErrorCode::InvalidParameter, "k must be non-negative");
  if (t.n() != g.n() || target.n() != g.n()) {
    throw Error(ErrorCode::InvalidTree, "tree and graph sizes differ");
  }
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");

  Result r;
  if (t == target) {
    r.yes = true;
    r.identical = true;
    return r;
  }
  if (k == 0) return r;

  r.badness = classify_bad(t, target);
  if ((r.early_no = check_early_no(r.badness, {}, k))) return r;
  r.ball = compute_bcb(t, r.badness, k);
  r.comps = components(t, r.ball);
  if ((r.early_no = check_early_no(r.badness, r.comps, k))) return r;

  for (const Component& z : r.comps) {
    TypeMap types = type_component(g, t, target, z, k, r.types);
    std::vector<VertexId> pre = premark(z, types, k);
    std::vector<VertexId> mz = mark(z, pre, r.badness);
    r.marks.premarked.insert(r.marks.premarked.end(), pre.begin(), pre.end());
    r.marks.marked.insert(r.marks.marked.end(), mz.begin(), mz.end());
    r.marks.per_component.push_back(std::move(mz));
    r.vertex_types.push_back(std::move(types));
  }
  std::sort(r.marks.premarked.begin(), r.marks.premarked.end());
  std::sort(r.marks.marked.begin(), r.marks.marked.end());

  if (auto seq = restricted_search(g, t, target, r.marks.marked, k, options, r.stats)) {
    r.yes = true;
    r.witness = std::move(*seq);
  }
  return r;
}

}  // namespace elimtree::fpt
