#include "doctest.h"

#include "sepgraph/audit.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/generators.hpp"

#include <cmath>

using namespace sepgraph;

namespace {

std::vector<AuditEntry> run(const Graph& g, const std::string& theorems, BetaSources sources = BetaSources::Both) {
  AuditOptions options;
  options.theorems = TheoremSelection::parse(theorems);
  options.sources = sources;
  return audit_graph(g, options);
}

const AuditEntry& find(const std::vector<AuditEntry>& entries, const std::string& id, const std::string& source) {
  for (const auto& e : entries)
    if (e.theorem_id == id && e.beta_source == source) return e;
  FAIL("no entry " << id << " / " << source);
  throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("matching audits on C4 and C5") {
  const auto c4 = run(cycle_graph(4), "main1,main1-pm");
  const auto& main1 = find(c4, "main1", "exact_weak");
  CHECK(main1.status() == EntryStatus::Pass);
  CHECK(main1.bound_exact == "3/2");
  CHECK(main1.exact_value == "2");
  CHECK(find(c4, "main1-pm", "exact_weak").status() == EntryStatus::Pass);

  const auto c5 = run(cycle_graph(5), "main5-weak");
  const auto& main5 = find(c5, "main5-weak", "exact_weak");
  CHECK(main5.status() == EntryStatus::Inapplicable);
}

TEST_CASE("petersen certificate audits") {
  const auto e = run(petersen_graph(), "main2,tough-main", BetaSources::Certificates);
  const auto& main2 = find(e, "main2", "certificate:adj_regular");
  CHECK(main2.status() == EntryStatus::Pass);
  CHECK(main2.bound_value == doctest::Approx(18.0 / 5));
  const auto& tough = find(e, "tough-main", "certificate:adj_regular");
  CHECK(tough.bound_value == doctest::Approx(0.5));
  CHECK(tough.exact_value == "4/3");
}

TEST_CASE("bipartite audits") {
  const auto k33 = run(complete_bipartite_graph(3, 3), "bipartite", BetaSources::Exact);
  CHECK(find(k33, "bip-profile", "exact_bipartite").status() == EntryStatus::Inapplicable);
  const auto& main4 = find(k33, "main4", "exact_strong");
  CHECK(main4.status() == EntryStatus::Pass);
  CHECK(main4.bound_value == doctest::Approx(3.0));

  const auto p4 = run(path_graph(4), "bip-profile", BetaSources::Exact);
  const auto& profile = find(p4, "bip-profile", "exact_bipartite");
  CHECK(profile.status() == EntryStatus::Pass);
  CHECK(profile.bound_value == doctest::Approx(2.0));

  const auto c6 = run(cycle_graph(6), "main3", BetaSources::Exact);
  CHECK(find(c6, "main3", "exact_weak").status() == EntryStatus::Pass);
}

TEST_CASE("claw weak toughness bound is decided exactly") {
  const auto e = run(star_graph(3), "weakly-tough-t,weakly-tough-tprime", BetaSources::Exact);
  const auto& t = find(e, "weakly-tough-t", "exact_weak");
  CHECK(t.status() == EntryStatus::Pass);
  CHECK(t.relation == ">");
  CHECK(t.margin > 0);
  CHECK(t.margin == doctest::Approx(1.0 / 3 - 5 * (1 - std::sqrt(1.0 / 3)) / (11 * std::sqrt(1.0 / 3))));
  CHECK(t.margin < 1e-3);
  CHECK(find(e, "weakly-tough-tprime", "exact_weak").status() == EntryStatus::Pass);
}

TEST_CASE("complete and edgeless graphs") {
  const auto k5 = run(complete_graph(5), "tough-main", BetaSources::Exact);
  CHECK(find(k5, "tough-main", "exact_strong").status() == EntryStatus::Pass);
  for (const auto& e : run(Graph(3), "all"))
    CHECK(e.status() == EntryStatus::Inapplicable);
}

TEST_CASE("theorem selection") {
  CHECK(TheoremSelection::parse("tough-main").contains("tough-main"));
  CHECK_FALSE(TheoremSelection::parse("tough-main").contains("main1"));
  CHECK(TheoremSelection::parse("lemma23").contains("lemma23-strong-c"));
  CHECK(TheoremSelection::parse("mixing").contains("mixing-eml"));
  CHECK_THROWS_AS(TheoremSelection::parse("main9"), DomainError);
  CHECK_THROWS_AS(parse_beta_sources("guess"), DomainError);
}

TEST_CASE("corpus sweep over connected graphs of order 5") {
  AuditOptions options;
  const auto report = run_corpus(CorpusSpec::parse("exhaustive-connected:5"), options);
  CHECK(report.graph_count == 728);
  CHECK(report.failure_count == 0);
  CHECK(report.skipped_count == 0);
  CHECK(report.graphs.empty());
  int failures = 0;
  for (const auto& s : report.summary) failures += s.fail;
  CHECK(failures == report.failure_count);
}

TEST_CASE("reports are identical for any job count") {
  AuditOptions options;
  options.keep_all_graphs = true;
  const auto spec = CorpusSpec::parse("gnp:8,0.4,20,3");
  const auto one = run_corpus(spec, options, 1);
  const auto three = run_corpus(spec, options, 3);
  REQUIRE(one.graphs.size() == three.graphs.size());
  for (std::size_t i = 0; i < one.graphs.size(); ++i) {
    CHECK(one.graphs[i].graph6 == three.graphs[i].graph6);
    REQUIRE(one.graphs[i].entries.size() == three.graphs[i].entries.size());
    for (std::size_t j = 0; j < one.graphs[i].entries.size(); ++j)
      CHECK(one.graphs[i].entries[j].margin == three.graphs[i].entries[j].margin);
  }
}

TEST_CASE("caps turn into skipped entries") {
  AuditOptions options;
  options.max_exact_n = 6;
  options.max_tough_n = 6;
  options.theorems = TheoremSelection::parse("main1,tough-main");
  options.sources = BetaSources::Exact;
  const auto report = run_corpus(CorpusSpec::parse("named:petersen"), options);
  CHECK(report.failure_count == 0);
  CHECK(report.skipped_count > 0);
  REQUIRE(report.graphs.size() == 1);
}
