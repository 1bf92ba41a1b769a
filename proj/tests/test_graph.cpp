#include "doctest.h"

#include <algorithm>
#include <vector>

#include "elimtree/error.hpp"
#include "elimtree/graph.hpp"

using namespace elimtree;

namespace {

using Edges = std::vector<std::pair<VertexId, VertexId>>;

Graph make(VertexId n, Edges e) { return Graph::from_edge_list(n, e); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an elimtree::Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("from_edge_list builds symmetric sorted adjacency") {
  const Graph p3 = make(3, {{0, 1}, {1, 2}});
  CHECK(p3.n() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 0));
  CHECK_FALSE(p3.has_edge(0, 2));
  CHECK(p3.edges() == Edges{{0, 1}, {1, 2}});

  const Graph single = make(1, {});
  CHECK(single.n() == 1);
  CHECK(single.edge_count() == 0);

  CHECK(make(3, {{0, 1}, {1, 0}, {1, 2}}) == p3);
}

TEST_CASE("from_edge_list rejects bad endpoints and loops") {
  CHECK(code_of([] { make(3, {{0, 3}}); }) == ErrorCode::InvalidVertex);
  CHECK(code_of([] { make(3, {{-1, 2}}); }) == ErrorCode::InvalidVertex);
  CHECK(code_of([] { make(3, {{1, 1}}); }) == ErrorCode::SelfLoop);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(make(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(is_connected(make(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(make(1, {})));
}

TEST_CASE("ball grows by BFS layers") {
  const Graph chain = make(3, {{0, 1}, {1, 2}});
  const std::vector<VertexId> s0{0};
  const std::vector<VertexId> s02{0, 2};
  CHECK(ball(chain, s0, 1) == std::vector<VertexId>{0, 1});
  CHECK(ball(chain, s0, 0) == std::vector<VertexId>{0});
  CHECK(ball(chain, s02, 1) == std::vector<VertexId>{0, 1, 2});
  const std::vector<VertexId> bad{3};
  CHECK(code_of([&] { ball(chain, bad, 1); }) == ErrorCode::InvalidVertex);
}

TEST_CASE("ball is monotone in the radius and covers everything at the diameter") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate(Family::RandomConnected, 15, {.edge_probability = 0.05, .seed = seed});
    const std::vector<VertexId> seeds{static_cast<VertexId>(seed % 15)};
    std::vector<VertexId> prev = ball(g, seeds, 0);
    for (int r = 1; r <= 15; ++r) {
      const auto cur = ball(g, seeds, r);
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }
    CHECK(prev.size() == 15);
  }
}

TEST_CASE("generators") {
  CHECK(generate(Family::Path, 3).edges() == Edges{{0, 1}, {1, 2}});
  CHECK(generate(Family::Complete, 3).edges() == Edges{{0, 1}, {0, 2}, {1, 2}});
  CHECK(generate(Family::Star, 4).edges() == Edges{{0, 1}, {0, 2}, {0, 3}});
  CHECK(generate(Family::Cycle, 4).edges() == Edges{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(generate(Family::CompleteSplit, 4, {.clique_size = 2}).edges() ==
        Edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(code_of([] { generate(Family::Cycle, 2); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { generate(Family::Path, 0); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { generate(Family::CompleteSplit, 3, {.clique_size = 4}); }) ==
        ErrorCode::InvalidParameter);
  CHECK(parse_family("complete_split") == Family::CompleteSplit);
  CHECK(code_of([] { parse_family("wheel"); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("every generated graph is connected; random ones are reproducible") {
  for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::Complete,
                   Family::CompleteSplit, Family::RandomConnected}) {
    for (VertexId n = 3; n <= 12; ++n) {
      CHECK(is_connected(generate(f, n, {.clique_size = 2, .seed = static_cast<std::uint64_t>(n)})));
    }
  }
  const GeneratorParams p{.edge_probability = 0.2, .seed = 42};
  CHECK(generate(Family::RandomConnected, 30, p) == generate(Family::RandomConnected, 30, p));
  const GeneratorParams q{.edge_probability = 0.2, .seed = 43};
  CHECK_FALSE(generate(Family::RandomConnected, 30, p) == generate(Family::RandomConnected, 30, q));
}
