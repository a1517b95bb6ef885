#include "doctest.h"

#include "sepgraph/error.hpp"
#include "sepgraph/generators.hpp"
#include "sepgraph/graph6.hpp"

using namespace sepgraph;

TEST_CASE("named families") {
  const Graph p = petersen_graph();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(p.is_regular());
  CHECK(hypercube_graph(3).size() == 12);
  CHECK(paley_graph(5) == cycle_graph(5));
  const Graph p13 = paley_graph(13);
  CHECK(p13.is_regular());
  CHECK(p13.degree(0) == 6);
  CHECK_THROWS_AS(paley_graph(7), DomainError);
  CHECK_THROWS_AS(paley_graph(9), DomainError);
  CHECK(gen_named("complete_bipartite(2,3)") == complete_bipartite_graph(2, 3));
  CHECK(gen_named("star", {3}) == complete_bipartite_graph(1, 3));
  CHECK_THROWS_AS(gen_named("nonsense(3)"), DomainError);
}

TEST_CASE("random regular graphs are simple, regular and reproducible") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = gen_random_regular(12, 3, seed);
    CHECK(g.is_regular());
    CHECK(g.degree(0) == 3);
    CHECK(g == gen_random_regular(12, 3, seed));
  }
  CHECK(gen_random_regular(12, 3, 1) != gen_random_regular(12, 3, 2));
  CHECK_THROWS_AS(gen_random_regular(5, 3, 1), DomainError);
}

TEST_CASE("corpora") {
  CHECK(collect_corpus(CorpusSpec::parse("exhaustive:4")).size() == 64);
  CHECK(collect_corpus(CorpusSpec::parse("exhaustive-connected:4")).size() == 38);
  CHECK(collect_corpus(CorpusSpec::parse("exhaustive-connected:5")).size() == 728);
  CHECK(collect_corpus(CorpusSpec::parse("named:petersen,cycle(5)")).size() == 2);
  CHECK(collect_corpus(CorpusSpec::parse("random-regular:12,3,5,7")).size() == 5);
  const auto spec = CorpusSpec::parse("gnp:8,0.5,10|connected", 4);
  for (const auto& g : collect_corpus(spec)) CHECK(g.is_connected());
  CHECK(CorpusSpec::parse(spec.to_string()).to_string() == spec.to_string());
  CHECK_THROWS_AS(CorpusSpec::parse("exhaustive:7"), DomainError);
  CHECK_THROWS_AS(CorpusSpec::parse("bogus:1"), DomainError);
}
