#include "doctest.h"

#include "oracles.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/generators.hpp"
#include "sepgraph/graph.hpp"

using namespace sepgraph;

TEST_CASE("vertex sets") {
  VertexSet a(70, {0, 2, 69});
  CHECK(a.size() == 3);
  CHECK(a.to_string() == "{0,2,69}");
  CHECK(a.complement().size() == 67);
  CHECK((a & VertexSet(70, {2, 3})).members() == std::vector<int>{2});
  CHECK_THROWS_AS(a | VertexSet(5), DomainError);
  CHECK(VertexSet::from_mask(4, 0b1010).members() == std::vector<int>{1, 3});
}

TEST_CASE("graph basics") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  Graph g(4, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.degree(1) == 2);
  CHECK_FALSE(g.is_connected());
  CHECK(g.has_isolated_vertex());
  CHECK(complete_graph(5).is_complete());
  CHECK(cycle_graph(6).is_regular());
  CHECK(edges_between(g, VertexSet(4, {0, 1}), VertexSet(4, {1, 2})) == 2);
  CHECK(edges_between(g, VertexSet(4, {0, 1}), VertexSet(4, {0, 1})) == 2);
  CHECK(neighborhood(g, VertexSet(4, {1})).members() == std::vector<int>{0, 2});
}

TEST_CASE("component splits agree with a DFS oracle") {
  Xoshiro256 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const Graph g = gen_gnp(n, 0.25, rng);
    const std::uint64_t s = rng.below(std::uint64_t{1} << n);
    const auto expected = oracle::components(g, oracle::members_of(s, n));
    const auto split = components_after_removal(g, VertexSet::from_mask(n, s));
    CHECK(split.count == expected.count);
    CHECK(split.odd == expected.odd);
    CHECK(split.isolated == expected.isolated);
    const auto rows = g.row_masks();
    const auto fast = masks::component_counts(rows, bits::full_mask(n) & ~s);
    CHECK(fast.count == expected.count);
    CHECK(fast.odd == expected.odd);
    CHECK(fast.isolated == expected.isolated);
  }
}

TEST_CASE("bipartition") {
  auto bip = bipartition_of(cycle_graph(6));
  REQUIRE(bip);
  CHECK(bip->left.members() == std::vector<int>{0, 2, 4});
  CHECK_FALSE(bipartition_of(cycle_graph(5)));
}
