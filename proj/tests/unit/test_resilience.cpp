#include "doctest.h"

#include "oracles.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/generators.hpp"
#include "sepgraph/resilience.hpp"

using namespace sepgraph;

TEST_CASE("toughness examples") {
  CHECK(toughness(petersen_graph()) == ExtRational(Rational(4, 3)));
  const auto claw = toughness_report(star_graph(3));
  CHECK(claw.toughness == ExtRational(Rational(1, 3)));
  CHECK(claw.toughness_witness.to_string() == "{0}");
  CHECK(claw.t_prime == ExtRational(Rational(1, 2)));
  CHECK(claw.scattering.value == 2);
  CHECK(toughness(complete_graph(5)).is_infinite());
  CHECK(scattering_number(complete_graph(5)).to_string() == "undefined");
  CHECK(enomoto_t_prime(cycle_graph(4)) == ExtRational(Rational(2)));
  CHECK(scattering_number(cycle_graph(4)).value == 0);
  const auto p4 = scattering_number(path_graph(4));
  CHECK(p4.value == 1);
  CHECK(p4.witness.to_string() == "{1}");
  CHECK_THROWS_AS(toughness(Graph(3)), DomainError);
  Caps caps;
  caps.toughness = 9;
  CHECK_THROWS_AS(toughness(petersen_graph(), caps), ResourceError);
}

TEST_CASE("toughness agrees with the definition on connected graphs of order 5") {
  for (const auto& g : collect_corpus(CorpusSpec::parse("exhaustive-connected:5"))) {
    const auto r = toughness_report(g);
    const auto o = oracle::toughness(g);
    REQUIRE(r.toughness.is_infinite() == o.infinite);
    if (o.infinite) continue;
    CHECK(r.toughness.value() == o.t);
    CHECK(r.t_prime.value() == o.t_prime);
    CHECK(*r.scattering.value == o.scattering);
    CHECK(r.t_prime > r.toughness);
    const auto split = components_after_removal(g, r.toughness_witness);
    CHECK(Rational(r.toughness_witness.size(), split.count) == o.t);
  }
}

TEST_CASE("adding an edge never lowers toughness") {
  Xoshiro256 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = gen_random_regular(10, 3, rng);
    const int u = static_cast<int>(rng.below(10)), v = static_cast<int>(rng.below(10));
    if (u == v || g.adjacent(u, v)) continue;
    CHECK(toughness(g.with_edge(u, v)) >= toughness(g));
  }
}
