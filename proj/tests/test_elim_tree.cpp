#include "doctest.h"

#include <numeric>
#include <set>

#include "elimtree/elim_tree.hpp"
#include "elimtree/error.hpp"
#include "elimtree/random.hpp"
#include "oracles.hpp"

using namespace elimtree;

namespace {

using Parents = std::vector<VertexId>;

ElimTree tree(Parents p) { return ElimTree::from_parents(std::move(p)); }

ElimTree random_tree(const Graph& g, Rng& rng) {
  std::vector<VertexId> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span(order));
  return from_ordering(g, order);
}

const Graph kP3 = generate(Family::Path, 3);
const Graph kK3 = generate(Family::Complete, 3);
const Graph kK2 = generate(Family::Path, 2);

}  // namespace

TEST_CASE("from_parents rejects malformed parent vectors") {
  CHECK_THROWS_AS(tree({}), Error);
  CHECK_THROWS_AS(tree({-1, -1}), Error);
  CHECK_THROWS_AS(tree({1, 0}), Error);         // no root
  CHECK_THROWS_AS(tree({-1, 2, 1}), Error);     // cycle away from root
  CHECK_THROWS_AS(tree({-1, 5}), Error);
  const ElimTree t = tree({1, -1, 1});
  CHECK(t.root() == 1);
  CHECK(std::vector<VertexId>(t.children(1).begin(), t.children(1).end()) == Parents{0, 2});
}

TEST_CASE("from_ordering realizes the recursive definition") {
  const std::vector<VertexId> o012{0, 1, 2}, o102{1, 0, 2}, o201{2, 0, 1};
  CHECK(from_ordering(kP3, o012).parents() == Parents{-1, 0, 1});
  CHECK(from_ordering(kP3, o102).parents() == Parents{1, -1, 1});
  CHECK(from_ordering(kK3, o201).parents() == Parents{2, 0, -1});

  const Graph split = Graph::from_edge_list(4, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {2, 3}});
  const std::vector<VertexId> o4{0, 1, 2, 3};
  try {
    from_ordering(split, o4);
    FAIL("expected DisconnectedGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DisconnectedGraph);
  }
  const std::vector<VertexId> dup{0, 0, 1}, short_order{0, 1};
  for (const auto* bad : {&dup, &short_order}) {
    try {
      from_ordering(kP3, *bad);
      FAIL("expected InvalidOrdering");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidOrdering);
    }
  }
}

TEST_CASE("from_ordering agrees with the literal recursive construction") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<VertexId>(rng.range(1, 14));
    const Graph g = generate(Family::RandomConnected, n, {.edge_probability = 0.25, .seed = rng.below(1u << 30)});
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span(order));
    CHECK(from_ordering(g, order).parents() == oracle::tree_of_ordering(g, order));
  }
}

TEST_CASE("validate") {
  CHECK(validate(kP3, tree({-1, 2, 0})));
  const Validation star0 = validate(kP3, tree({-1, 0, 0}));
  CHECK_FALSE(star0);
  CHECK(star0.diagnostic.find("{1,2}") != std::string::npos);
  CHECK(validate(generate(Family::Path, 1), tree({-1})));
  // Ancestor condition holds but T(0) = {0,2} is not connected in P3.
  const Validation split = validate(kP3, tree({1, -1, 0}));
  CHECK_FALSE(split);
  CHECK(split.diagnostic.find("connected") != std::string::npos);
  CHECK_FALSE(validate(kP3, tree({-1, 0})));
}

TEST_CASE("every valid tree comes from some ordering (n <= 5, all graphs)") {
  for (VertexId n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      const auto by_order = oracle::trees_by_orderings(g);
      std::set<Parents> valid;
      Parents p(static_cast<std::size_t>(n));
      std::uint64_t total = 1;
      for (VertexId i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n + 1);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (VertexId i = 0; i < n; ++i) {
          p[i] = static_cast<VertexId>(c % static_cast<std::uint64_t>(n + 1)) - 1;
          c /= static_cast<std::uint64_t>(n + 1);
        }
        try {
          if (validate(g, tree(p))) valid.insert(p);
        } catch (const Error&) {
        }
      }
      REQUIRE(valid == by_order);
    }
  }
}

TEST_CASE("rotate follows the six rules") {
  const ElimTree chain = tree({-1, 0, 1});
  CHECK(rotate(kP3, chain, {0, 1}).parents() == Parents{1, -1, 1});
  CHECK(rotate(kP3, chain, {1, 2}).parents() == Parents{-1, 2, 0});
  CHECK(rotate(kK2, tree({-1, 0}), {0, 1}).parents() == Parents{1, -1});

  // Star K_{1,4} rooted at center: lifting leaf 2 leaves the other leaves on 0.
  const Graph star = generate(Family::Star, 5);
  const ElimTree r = rotate(star, tree({-1, 0, 0, 0, 0}), {0, 2});
  CHECK(r.parents() == Parents{2, 0, -1, 0, 0});

  // P4 chain 0->1->2->3, rotating (1,2): 3 is adjacent only to 2, so it
  // stays below 2.
  const Graph p4 = generate(Family::Path, 4);
  CHECK(rotate(p4, tree({-1, 0, 1, 2}), {1, 2}).parents() == Parents{-1, 2, 0, 2});
  // C4 chain 0->1->2->3, rotating (1,2): 3 is adjacent to 0 and 2 but not
  // 1, so it stays under 2.
  const Graph c4 = generate(Family::Cycle, 4);
  CHECK(rotate(c4, tree({-1, 0, 1, 2}), {1, 2}).parents() == Parents{-1, 2, 0, 2});
  // Rotating (0,1) on the same tree: T(2) = {2,3} touches 0 through 3.
  CHECK(rotate(c4, tree({-1, 0, 1, 2}), {0, 1}).parents() == Parents{1, -1, 0, 2});
}

TEST_CASE("rotate rejects non-edges") {
  const ElimTree chain = tree({-1, 0, 1});
  for (RotationEdge e : {RotationEdge{1, 0}, RotationEdge{0, 2}, RotationEdge{-1, 0}}) {
    try {
      rotate(kP3, chain, e);
      FAIL("expected NotATreeEdge");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::NotATreeEdge);
    }
  }
}

TEST_CASE("apply_sequence") {
  const ElimTree chain = tree({-1, 0, 1});
  const RotationSequence two{{0, 1}, {1, 2}};
  CHECK(apply_sequence(kP3, chain, two).parents() == Parents{1, 2, -1});
  CHECK(apply_sequence(kP3, chain, {}) == chain);
  const RotationSequence back{{0, 1}, {1, 0}};
  CHECK(apply_sequence(kK2, tree({-1, 0}), back) == tree({-1, 0}));

  const RotationSequence broken{{0, 1}, {0, 1}};
  try {
    apply_sequence(kP3, chain, broken);
    FAIL("expected NotATreeEdgeError");
  } catch (const NotATreeEdgeError& e) {
    CHECK(e.index() == 2);
    CHECK(e.code() == ErrorCode::NotATreeEdge);
  }
}

TEST_CASE("equality ignores construction order of children") {
  CHECK(equals(tree({-1, 0, 1}), tree({-1, 0, 1})));
  CHECK_FALSE(equals(tree({-1, 0, 1}), tree({1, -1, 1})));
  const std::vector<VertexId> a{1, 0, 2}, b{1, 2, 0};
  CHECK(equals(from_ordering(kP3, a), from_ordering(kP3, b)));
}

TEST_CASE("rotation properties on random instances") {
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<VertexId>(rng.range(2, 12));
    const Graph g = generate(Family::RandomConnected, n, {.edge_probability = rng.unit() * 0.6, .seed = rng.below(1u << 30)});
    const ElimTree t = random_tree(g, rng);
    const auto edges = t.edges();
    const RotationEdge e = edges[rng.below(edges.size())];
    const ElimTree r = rotate(g, t, e);

    REQUIRE(validate(g, r));
    CHECK(rotate(g, r, {e.child, e.parent}) == t);

    int changed = 0;
    for (VertexId v = 0; v < n; ++v) changed += !same_children(t, r, v);
    CHECK(changed <= 3);
    CHECK(changed >= 2);

    const auto d0 = oracle::tree_distances(t);
    const auto d1 = oracle::tree_distances(r);
    for (VertexId x = 0; x < n; ++x)
      for (VertexId y = 0; y < n; ++y) CHECK(std::abs(d0[x][y] - d1[x][y]) <= 1);
  }
}

TEST_CASE("sequence text round trip") {
  const RotationSequence seq{{0, 1}, {12, 3}, {4, 5}};
  CHECK(format_sequence(seq) == "0->1 12->3 4->5");
  CHECK(parse_sequence(format_sequence(seq)) == seq);
  CHECK(parse_sequence("witness: 2->1\n 1 -> 0") == RotationSequence{{2, 1}, {1, 0}});
  CHECK(parse_sequence("").empty());
}
