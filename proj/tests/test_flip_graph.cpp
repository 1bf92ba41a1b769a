#include "doctest.h"

#include <numeric>
#include <set>

#include "elimtree/error.hpp"
#include "elimtree/flip_graph.hpp"
#include "elimtree/random.hpp"
#include "oracles.hpp"

using namespace elimtree;

namespace {

using Parents = std::vector<VertexId>;

ElimTree tree(Parents p) { return ElimTree::from_parents(std::move(p)); }

const Graph kP3 = generate(Family::Path, 3);
const Graph kK3 = generate(Family::Complete, 3);
const Graph kK2 = generate(Family::Path, 2);
const ElimTree kChain012 = tree({-1, 0, 1});
const ElimTree kStar1 = tree({1, -1, 1});
const ElimTree kChain210 = tree({1, 2, -1});

std::set<Parents> keys(const FlipGraph& fg) {
  std::set<Parents> out;
  for (const auto& t : fg.nodes) out.insert(t.parents());
  return out;
}

}  // namespace

TEST_CASE("neighbors enumerates one rotation per tree edge") {
  const auto nb = neighbors(kP3, kChain012);
  REQUIRE(nb.size() == 2);
  CHECK(nb[0].edge == RotationEdge{0, 1});
  CHECK(nb[0].tree == kStar1);
  CHECK(nb[1].edge == RotationEdge{1, 2});
  CHECK(nb[1].tree.parents() == Parents{-1, 2, 0});

  const auto k2 = neighbors(kK2, tree({-1, 0}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].tree.parents() == Parents{1, -1});
  CHECK(neighbors(generate(Family::Path, 1), tree({-1})).empty());
}

TEST_CASE("enumerate_all matches ordering enumeration") {
  CHECK(enumerate_all(kP3).size() == 5);
  CHECK(enumerate_all(kK3).size() == 6);
  CHECK(enumerate_all(generate(Family::Path, 4)).size() == 14);
  for (VertexId n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      const FlipGraph fg = enumerate_all(g);
      REQUIRE(keys(fg) == oracle::trees_by_orderings(g));
      for (std::size_t i = 0; i < fg.size(); ++i) {
        CHECK(fg.adjacency[i].size() == static_cast<std::size_t>(n - 1));
        for (std::size_t j : fg.adjacency[i]) {
          CHECK(std::binary_search(fg.adjacency[j].begin(), fg.adjacency[j].end(), i));
        }
      }
    }
  }
}

TEST_CASE("enumerate_all refuses oversized or disconnected graphs") {
  try {
    enumerate_all(generate(Family::Path, 11));
    FAIL("expected InstanceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InstanceTooLarge);
  }
  CHECK(enumerate_all(generate(Family::Path, 6), 6).size() == 132);
  const Graph split = Graph::from_edge_list(2, std::vector<std::pair<VertexId, VertexId>>{});
  CHECK_THROWS_AS(enumerate_all(split), Error);
}

TEST_CASE("bfs_distance examples") {
  CHECK(bfs_distance(kP3, kChain012, kChain012) == 0);
  CHECK(bfs_distance(kP3, kChain012, kStar1) == 1);
  CHECK(bfs_distance(kP3, kChain012, kChain210) == 2);
  CHECK(bfs_distance(kK3, kChain012, kChain210) == 3);
  CHECK(bfs_distance(kP3, kChain012, kChain210, 1) == std::nullopt);
  CHECK(bfs_distance(kP3, kChain012, kChain210, 2) == 2);
}

TEST_CASE("bfs_distance needs a cap on large graphs") {
  const Graph g = generate(Family::Path, 13);
  std::vector<VertexId> order(13);
  std::iota(order.begin(), order.end(), 0);
  const ElimTree t = from_ordering(g, order);
  CHECK_THROWS_AS(bfs_distance(g, t, t), Error);
  CHECK(bfs_distance(g, t, t, 3) == 0);
  const ElimTree r = rotate(g, rotate(g, t, {0, 1}), {1, 2});
  CHECK(bfs_distance(g, t, r, 3) == 2);
  CHECK(bfs_distance(g, t, r, 1) == std::nullopt);
}

TEST_CASE("bfs_distance agrees with single-source BFS over the flip graph") {
  for (const Graph& g : {generate(Family::Cycle, 5), generate(Family::Star, 5),
                         generate(Family::CompleteSplit, 5, {.clique_size = 2})}) {
    const FlipGraph fg = enumerate_all(g);
    for (std::size_t s = 0; s < fg.size(); s += 7) {
      const auto dist = fg.distances_from(s);
      for (std::size_t t = 0; t < fg.size(); ++t) {
        CHECK(bfs_distance(g, fg.nodes[s], fg.nodes[t]) == dist[t]);
        const auto path = bfs_path(g, fg.nodes[s], fg.nodes[t]);
        REQUIRE(path);
        CHECK(static_cast<int>(path->size()) == dist[t]);
        CHECK(apply_sequence(g, fg.nodes[s], *path) == fg.nodes[t]);
      }
    }
  }
}

TEST_CASE("bfs_distance is a metric") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = generate(Family::RandomConnected, 6, {.edge_probability = 0.3, .seed = rng.below(1000)});
    const FlipGraph fg = enumerate_all(g);
    const auto& a = fg.nodes[rng.below(fg.size())];
    const auto& b = fg.nodes[rng.below(fg.size())];
    const auto& c = fg.nodes[rng.below(fg.size())];
    const int ab = *bfs_distance(g, a, b), ba = *bfs_distance(g, b, a);
    const int bc = *bfs_distance(g, b, c), ac = *bfs_distance(g, a, c);
    CHECK(ab == ba);
    CHECK((ab == 0) == (a == b));
    CHECK(ac <= ab + bc);
  }
}

TEST_CASE("complete graphs give the permutahedron") {
  for (VertexId n = 2; n <= 4; ++n) {
    const Graph g = generate(Family::Complete, n);
    std::vector<std::vector<VertexId>> perms;
    std::vector<VertexId> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& a : perms)
      for (const auto& b : perms)
        CHECK(bfs_distance(g, tree(oracle::chain_parents(a)), tree(oracle::chain_parents(b))) ==
              oracle::inversions(a, b));
  }
}

TEST_CASE("restricted_bfs_distance") {
  const std::vector<VertexId> all{0, 1, 2}, no_zero{1, 2}, k2{0, 1};
  CHECK(restricted_bfs_distance(kP3, kChain012, kStar1, all, 1) == 1);
  CHECK(restricted_bfs_distance(kP3, kChain012, kStar1, no_zero, 3) == std::nullopt);
  CHECK(restricted_bfs_distance(kK2, tree({-1, 0}), tree({1, -1}), k2, 1) == 1);

  const Graph g = generate(Family::Cycle, 5);
  const FlipGraph fg = enumerate_all(g);
  const std::vector<VertexId> every{0, 1, 2, 3, 4};
  for (std::size_t t = 0; t < fg.size(); ++t) {
    for (int cap = 0; cap <= 3; ++cap) {
      CHECK(restricted_bfs_distance(g, fg.nodes[0], fg.nodes[t], every, cap) ==
            bfs_distance(g, fg.nodes[0], fg.nodes[t], cap));
    }
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(kK2) == 1);
  CHECK(diameter(kK3) == 3);
  CHECK(diameter(kP3) == 2);
  CHECK(diameter(generate(Family::Complete, 4)) == 6);
  CHECK_THROWS_AS(diameter(generate(Family::Path, 11)), Error);
}

TEST_CASE("DOT export") {
  const FlipGraph fg = enumerate_all(kP3);
  const std::string dot = to_dot(fg);
  CHECK(dot.rfind("graph flip_graph {", 0) == 0);
  CHECK(dot.find("[label=\"[-1,0,1]\"]") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 5);  // pentagon
  const std::vector<std::string> names{"a", "b", "c"};
  CHECK(to_dot(fg, names).find("[label=\"[-,a,b]\"]") != std::string::npos);
}
