#include "doctest.h"

#include "oracles.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/generators.hpp"
#include "sepgraph/separation.hpp"

using namespace sepgraph;

TEST_CASE("profiles of small named graphs") {
  const auto c4 = separation_profile(cycle_graph(4));
  CHECK(c4.beta_sq_weak == Rational(1, 9));
  CHECK(c4.beta_sq_strong == Rational(1));
  REQUIRE(c4.strong_witness);
  CHECK(c4.strong_witness->x.to_string() == "{0,2}");
  CHECK(c4.strong_witness->y.to_string() == "{0,2}");
  CHECK(separation_profile(cycle_graph(5)).beta_sq_weak == Rational(1, 6));
  CHECK(separation_profile(star_graph(3)).beta_sq_weak == Rational(1, 3));
  CHECK(separation_profile(path_graph(3)).beta_sq_weak == Rational(1, 4));
}

TEST_CASE("complete graphs are (n,0)-graphs") {
  for (int n = 1; n <= 6; ++n) {
    const auto p = separation_profile(complete_graph(n));
    CHECK(p.beta_sq_weak == Rational(0));
    CHECK(p.beta_sq_strong == Rational(0));
    CHECK_FALSE(p.strong_witness);
  }
  const Graph k4 = complete_graph(4);
  const auto rows = k4.row_masks();
  CHECK(Rational(static_cast<long long>(detail::raw_strong_max(rows, 4).num),
                 static_cast<long long>(detail::raw_strong_max(rows, 4).den)) == Rational(1, 9));
  CHECK(is_weak_beta_graph(k4, BetaValue::exact(Rational(0))).holds);
}

TEST_CASE("maximal-Y reduction equals full pair enumeration on n <= 4") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& g : collect_corpus(CorpusSpec::parse("exhaustive:" + std::to_string(n)))) {
      const auto rows = g.row_masks();
      const auto w = detail::raw_weak_max(rows, n);
      const auto s = detail::raw_strong_max(rows, n);
      CHECK(Rational(static_cast<long long>(w.num), static_cast<long long>(w.den)) * Rational(w.witness ? 1 : 0) ==
            oracle::pair_max(g, oracle::Mode::Weak));
      CHECK(Rational(static_cast<long long>(s.num), static_cast<long long>(s.den)) * Rational(s.witness ? 1 : 0) ==
            oracle::pair_max(g, oracle::Mode::Strong));
    }
}

TEST_CASE("bipartite profile") {
  const Graph p4 = path_graph(4);
  auto bip = bipartition_of(p4);
  REQUIRE(bip);
  Rational expected = oracle::bipartite_pair_max(p4, bip->left.mask(), bip->right.mask());
  CHECK(bipartite_profile(p4, *bip).beta_sq == Rational(1));
  CHECK(expected == Rational(1));
  CHECK(bipartite_profile(complete_bipartite_graph(3, 3), *bipartition_of(complete_bipartite_graph(3, 3))).beta_sq ==
        Rational(0));
  CHECK_THROWS_AS(bipartite_profile(p4, Bipartition{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}), DomainError);
}

TEST_CASE("membership with exact and approximate beta") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_weak_beta_graph(c4, BetaValue::exact(Rational(1, 3))).holds);
  CHECK_FALSE(is_weak_beta_graph(c4, BetaValue::exact(Rational(33, 100))).holds);
  const auto strong = is_strong_beta_graph(c4, BetaValue::exact(Rational::parse("0.99")));
  CHECK_FALSE(strong.holds);
  REQUIRE(strong.counterexample);
  CHECK(strong.counterexample->x.to_string() == "{0,2}");
  CHECK(is_weak_beta_graph(c4, BetaValue::approx(1.0 / 3.0 - 1e-12)).holds);
  CHECK_THROWS_AS(BetaValue::exact(Rational(-1)), DomainError);
}

TEST_CASE("separator lemmas on the claw") {
  const Graph claw = star_graph(3);
  const auto beta = BetaValue::from_square(separation_profile(claw).beta_sq_weak);
  const VertexSet s(4, {0});
  const auto split = canonical_component_split(claw, s);
  CHECK(split.x.to_string() == "{1}");
  CHECK(split.y.to_string() == "{2,3}");
  const auto l22 = lemma22_check(claw, s, beta);
  CHECK(l22.x_bound.holds);
  CHECK(l22.s_bound.holds);
  const auto l23 = lemma23_bounds(claw, s, beta, true);
  CHECK(l23.components == 3);
  CHECK(l23.first.holds);
  CHECK(l23.second.holds);
  CHECK(l23.second.margin == doctest::Approx(0.3923).epsilon(1e-3));
  CHECK_THROWS_AS(lemma23_bounds(claw, VertexSet(4, {1}), beta, true), DomainError);
  CHECK_THROWS_AS(lemma22_check(claw, s, VertexSet(4, {1, 2}), VertexSet(4, {3}), beta), DomainError);
}

TEST_CASE("separator lemmas on C6") {
  const Graph c6 = cycle_graph(6);
  const auto p = separation_profile(c6);
  const VertexSet s(6, {0, 3});
  for (bool weak : {true, false}) {
    const auto beta = BetaValue::from_square(weak ? p.beta_sq_weak : p.beta_sq_strong);
    if (!weak) {
      const auto l22 = lemma22_check(c6, s, beta);
      CHECK(l22.x_bound.holds);
    }
    const auto l23 = lemma23_bounds(c6, s, beta, weak);
    CHECK(l23.components == 2);
    CHECK(l23.first.holds);
    CHECK(l23.second.holds);
  }
}

TEST_CASE("caps") {
  Caps caps;
  caps.exponential = 8;
  CHECK_THROWS_AS(separation_profile(cycle_graph(9), caps), ResourceError);
}

TEST_CASE("path and petersen profiles") {
  const Graph p3 = path_graph(3);
  const auto p = separation_profile(p3);
  CHECK(p.beta_sq_weak == Rational(1, 4));
  CHECK(p.beta_sq_strong == Rational(4));
  CHECK(p.strong_witness->x.to_string() == "{0,2}");
  const auto weak = is_weak_beta_graph(p3, BetaValue::exact(Rational::parse("0.4")));
  CHECK_FALSE(weak.holds);
  REQUIRE(weak.counterexample);
  CHECK(weak.counterexample->x.to_string() == "{0}");
  CHECK(weak.counterexample->y.to_string() == "{2}");
  const Graph pg = petersen_graph();
  CHECK(separation_profile(pg).beta_sq_strong <= Rational(4, 9));
  CHECK(is_strong_beta_graph(pg, BetaValue::exact(Rational(2, 3))).holds);
}

TEST_CASE("bipartite profile of C6") {
  const Graph c6 = cycle_graph(6);
  const Bipartition sides{VertexSet(6, {0, 2, 4}), VertexSet(6, {1, 3, 5})};
  const auto b = bipartite_profile(c6, sides);
  CHECK(b.beta_sq == Rational(1, 4));
  CHECK(b.beta_sq == oracle::bipartite_pair_max(c6, sides.left.mask(), sides.right.mask()));
  REQUIRE(b.witness);
  CHECK(b.witness->x.to_string() == "{0}");
  CHECK(b.witness->y.to_string() == "{3}");
}

TEST_CASE("lemma22 is tight on C4") {
  const Graph c4 = cycle_graph(4);
  const auto r = lemma22_check(c4, VertexSet(4, {1, 3}), VertexSet(4, {0}), VertexSet(4, {2}),
                               BetaValue::exact(Rational(1, 3)));
  CHECK(r.x_bound.holds);
  CHECK(r.s_bound.holds);
  CHECK(r.x_bound.margin == doctest::Approx(0.0));
  CHECK(r.s_bound.margin == doctest::Approx(0.0));
}

TEST_CASE("profile inequalities and edge deletion on exhaustive(5)") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : collect_corpus(CorpusSpec::parse("exhaustive:" + std::to_string(n)))) {
      const auto p = separation_profile(g);
      CHECK(p.beta_sq_weak <= Rational(1));
      CHECK(p.beta_sq_weak <= p.beta_sq_strong);
      CHECK(is_weak_beta_graph(g, BetaValue::exact(Rational(1))).holds);
      if (g.is_complete()) continue;
      for (auto [u, v] : g.edges()) {
        const auto q = separation_profile(g.without_edge(u, v));
        CHECK(p.beta_sq_weak <= q.beta_sq_weak);
        CHECK(p.beta_sq_strong <= q.beta_sq_strong);
      }
    }
}

TEST_CASE("maximal-Y reduction equals full pair enumeration on bipartite graphs of order 5") {
  for (const auto& g : collect_corpus(CorpusSpec::parse("exhaustive:5")))
    if (auto bip = bipartition_of(g); bip && !bip->left.empty() && !bip->right.empty())
      CHECK(bipartite_profile(g, *bip).beta_sq ==
            oracle::bipartite_pair_max(g, bip->left.mask(), bip->right.mask()));
}
