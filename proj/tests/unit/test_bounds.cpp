#include "doctest.h"

#include "sepgraph/bounds.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/generators.hpp"
#include "sepgraph/resilience.hpp"
#include "sepgraph/separation.hpp"

using namespace sepgraph;

namespace {

// Lower bounds must not grow with beta and upper bounds must not shrink,
// otherwise a certificate above the exact value could produce a false failure.
template <class F>
void check_monotone(F f, bool lower, double from = 1e-3, double to = 1.0) {
  for (double b = from; b <= to; b += 1e-3) {
    const double here = f(b), next = f(b + 1e-6);
    if (lower)
      CHECK(next <= here + 1e-12);
    else
      CHECK(next >= here - 1e-12);
  }
}

} // namespace

TEST_CASE("bounds are monotone in beta") {
  using namespace bounds;
  for (int n : {2, 7, 40}) {
    check_monotone([&](double b) { return weak_matching(b, n); }, true);
    check_monotone([&](double b) { return strong_matching(b, n); }, true);
    check_monotone([&](double b) { return strong_matching_refined(b, n); }, true);
    check_monotone([&](double b) { return bipartite_weak(b, 1.5, n); }, true);
    check_monotone([&](double b) { return bipartite_strong(b, n); }, true);
    check_monotone([&](double b) { return bipartite_profile_matching(b, 2.0, n); }, true);
    check_monotone([&](double b) { return separated_side_cap(b, n); }, false);
    check_monotone([&](double b) { return strong_scattering(b, n); }, false);
    check_monotone([&](double b) { return weak_scattering(b, n); }, false, 1e-3, 0.999);
    check_monotone([&](double b) { return separator_size_floor(b, n); }, true);
    check_monotone([&](double b) { return weak_separator_floor(b, n); }, true);
  }
  check_monotone([](double b) { return strong_toughness(b); }, true);
  check_monotone([](double b) { return weak_t_prime(b); }, true);
  check_monotone([](double b) { return weak_toughness_fraction(b, 5, 11); }, true);
  check_monotone([](double b) { return weak_toughness_fraction(b, 6, 13); }, true);
  check_monotone([](double b) { return weak_toughness_eps(b, Rational(1, 10)); }, true);
}

TEST_CASE("exact and floating evaluations agree") {
  using namespace bounds;
  for (int k = 1; k <= 30; ++k) {
    const Rational sq(k, 30);
    const Surd exact = BetaValue::from_square(sq).surd();
    const double b = exact.to_double();
    CHECK(weak_matching(exact, 9).to_double() == doctest::Approx(weak_matching(b, 9)));
    CHECK(weak_toughness_fraction(exact, 5, 11).to_double() == doctest::Approx(weak_toughness_fraction(b, 5, 11)));
    CHECK(weak_scattering(exact, 9).to_double() == doctest::Approx(weak_scattering(b, 9)).epsilon(1e-9));
    CHECK(bipartite_weak(exact, Surd(Rational(3, 2)), 4).to_double() ==
          doctest::Approx(bipartite_weak(b, 1.5, 4)));
  }
}

TEST_CASE("separator checker agrees with the per-separator lemmas") {
  std::vector<Rational> squares;
  for (int k = 1; k <= 24; ++k) squares.emplace_back(k, 20);
  for (const auto& g : collect_corpus(CorpusSpec::parse("exhaustive:5"))) {
    const int n = g.order();
    for (const auto& sq : squares) {
      const auto beta = BetaValue::from_square(sq);
      const bool open = sq < Rational(1);
      const SeparatorChecker checker(n, beta, beta);
      for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1U) s.insert(v);
        const int c = components_after_removal(g, s).count;
        if (c < 2) continue;
        const auto split = canonical_component_split(g, s);
        try {
          const auto l22 = lemma22_check(g, s, beta);
          const auto x = checker.lemma22_x(split.x.size());
          const auto y = checker.lemma22_s(s.size(), split.x.size());
          CHECK(x.holds == l22.x_bound.holds);
          CHECK(y.skipped == l22.s_bound.skipped);
          if (!y.skipped) CHECK(y.holds == l22.s_bound.holds);
          CHECK(x.margin == doctest::Approx(l22.x_bound.margin));
        } catch (const DomainError&) {
          // the split violates |X||Y| <= beta^2 (n-|X|)(n-|Y|) for this beta
        }
        const auto strong = lemma23_bounds(g, s, beta, false);
        CHECK(checker.lemma23_strong_c(c).holds == strong.first.holds);
        CHECK(checker.lemma23_strong_scatter(s.size(), c).holds == strong.second.holds);
        if (open) {
          const auto weak = lemma23_bounds(g, s, beta, true);
          CHECK(checker.lemma23_weak_s(s.size(), c).holds == weak.first.holds);
          CHECK(checker.lemma23_weak_scatter(s.size(), c).holds == weak.second.holds);
          CHECK(checker.lemma23_weak_scatter(s.size(), c).margin == doctest::Approx(weak.second.margin));
        } else {
          CHECK(checker.lemma23_weak_s(s.size(), c).skipped);
        }
      }
    }
  }
}
