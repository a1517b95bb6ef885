// One line per acceptance criterion. Exit status is the number of failures.

#include "oracles.hpp"
#include "sepgraph/audit.hpp"
#include "sepgraph/bounds.hpp"
#include "sepgraph/cli.hpp"
#include "sepgraph/generators.hpp"
#include "sepgraph/graph6.hpp"
#include "sepgraph/matching.hpp"
#include "sepgraph/resilience.hpp"
#include "sepgraph/separation.hpp"
#include "sepgraph/spectra.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sepgraph;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

Rational raw(const detail::RawMax& m) {
  if (!m.witness) return Rational(0);
  return Rational(static_cast<long long>(m.num), static_cast<long long>(m.den));
}

std::vector<Graph> exhaustive(int n) { return collect_corpus(CorpusSpec::parse("exhaustive:" + std::to_string(n))); }

void matching_oracle(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto graphs = exhaustive(6);
  for (const auto& g : graphs) o.require(max_matching(g).alpha_prime == oracle::berge_tutte(g), write_graph6(g));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 300, "runtime");
  o.note << graphs.size() << " graphs, " << secs << " s";
}

void fractional_oracle(Outcome& o) {
  const auto graphs = exhaustive(6);
  int bipartite = 0;
  for (const auto& g : graphs) {
    const Rational frac = fractional_matching_number(g);
    o.require(frac == oracle::fractional_berge_tutte(g), write_graph6(g));
    if (bipartition_of(g)) {
      ++bipartite;
      o.require(frac == Rational(max_matching(g).alpha_prime), "bipartite " + write_graph6(g));
    }
  }
  o.note << graphs.size() << " graphs, " << bipartite << " bipartite";
}

void reduction(Outcome& o) {
  int count = 0, bip = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : exhaustive(n)) {
      ++count;
      const auto rows = g.row_masks();
      o.require(raw(detail::raw_weak_max(rows, n)) == oracle::pair_max(g, oracle::Mode::Weak), "weak " + write_graph6(g));
      o.require(raw(detail::raw_strong_max(rows, n)) == oracle::pair_max(g, oracle::Mode::Strong),
                "strong " + write_graph6(g));
      if (auto sides = bipartition_of(g); sides && !sides->left.empty() && !sides->right.empty()) {
        ++bip;
        o.require(bipartite_profile(g, *sides).beta_sq ==
                      oracle::bipartite_pair_max(g, sides->left.mask(), sides->right.mask()),
                  "bipartite " + write_graph6(g));
      }
    }
  o.note << count << " graphs, " << bip << " with a bipartition";
}

void audit_sweep(Outcome& o) {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = run_cli({"audit", "--corpus", "exhaustive-connected:5", "--theorems", "all", "--beta-source", "both"},
                           in, out, err);
  o.require(code == kExitOk, "exit code " + std::to_string(code));
  AuditOptions options;
  options.sources = BetaSources::Both;
  const auto report = run_corpus(CorpusSpec::parse("exhaustive-connected:6"), options);
  o.require(report.failure_count == 0, "failures on order 6");
  o.require(report.skipped_count == 0, "skipped entries on order 6");
  int applicable = 0;
  for (const auto& s : report.summary) applicable += s.pass + s.fail;
  o.note << "order 5 exit " << code << "; order 6: " << report.graph_count << " graphs, " << applicable
         << " evaluated entries, " << report.failure_count << " failures";
}

void certificate_soundness(Outcome& o) {
  auto graphs = exhaustive(6);
  for (const char* name : {"petersen", "paley(13)", "hypercube(3)", "complete_bipartite(2,3)", "star(3)"})
    graphs.push_back(gen_named(name));
  for (int n = 4; n <= 9; ++n) graphs.push_back(cycle_graph(n));
  int checked = 0;
  for (const auto& g : graphs) {
    const int n = g.order();
    const auto rows = g.row_masks();
    const double weak = std::sqrt(raw(detail::raw_weak_max(rows, n)).to_double());
    const double strong = std::sqrt(raw(detail::raw_strong_max(rows, n)).to_double());
    const auto sides = bipartition_of(g);
    for (const auto& c : beta_certificates(g)) {
      if (!c.applicable) continue;
      double exact = 0;
      if (c.mode == BetaMode::Weak) exact = weak;
      if (c.mode == BetaMode::Strong) exact = strong;
      if (c.mode == BetaMode::Bipartite) exact = std::sqrt(bipartite_profile(g, *sides).beta_sq.to_double());
      ++checked;
      o.require(c.value >= exact - 1e-9, to_string(c.kind) + " on " + write_graph6(g));
    }
  }
  auto value = [](const Graph& g, CertificateKind kind) {
    for (const auto& c : beta_certificates(g))
      if (c.kind == kind && c.applicable) return c.value;
    return -1.0;
  };
  o.require(std::abs(value(path_graph(3), CertificateKind::LapWeak) - 0.5) < 1e-9, "P3 lap_weak tightness");
  o.require(std::abs(value(cycle_graph(4), CertificateKind::AdjRegular) - 1.0) < 1e-9, "C4 adj_regular tightness");
  o.require(std::abs(value(cycle_graph(4), CertificateKind::LapWeak) - 1.0 / 3) < 1e-9, "C4 lap_weak tightness");
  o.require(std::abs(std::sqrt(separation_profile(path_graph(3)).beta_sq_weak.to_double()) - 0.5) < 1e-12, "P3 weak");
  o.note << checked << " applicable certificates on " << graphs.size() << " graphs; tightness cases exact";
}

void mixing_sweep(Outcome& o) {
  AuditOptions options;
  options.theorems = TheoremSelection::parse("mixing");
  int evaluated = 0, failures = 0;
  for (const char* spec : {"exhaustive-connected:5", "random-regular:12,3,100,7"}) {
    const auto report = run_corpus(CorpusSpec::parse(spec), options);
    for (const auto& s : report.summary) evaluated += s.pass + s.fail;
    failures += report.failure_count;
    o.require(report.skipped_count == 0, std::string("skipped in ") + spec);
  }
  o.require(failures == 0, "mixing failures");
  o.require(evaluated > 0, "no mixing entries");
  o.note << evaluated << " evaluated entries, " << failures << " failures";
}

void spectral_checks(Outcome& o) {
  for (int n = 3; n <= 8; ++n) {
    const auto s = spectral_summary(complete_graph(n));
    const double want = static_cast<double>(n) / (n - 1);
    o.require(std::abs(s.sigma2() - want) < 1e-9 && std::abs(s.sigma_n() - want) < 1e-9, "K" + std::to_string(n));
  }
  const auto c4 = spectral_summary(cycle_graph(4)).laplacian_eigs;
  const std::vector<double> want{0, 2, 2, 4};
  for (int i = 0; i < 4; ++i) o.require(std::abs(c4[i] - want[i]) < 1e-9, "laplacian(C4)");
  o.require(std::abs(spectral_summary(petersen_graph()).lambda - 2.0) < 1e-9, "petersen lambda");
  int count = 0;
  for (const auto& g : exhaustive(6)) {
    if (g.size() == 0) continue;
    const auto s = spectral_summary(g);
    ++count;
    o.require((s.sigma_n() - s.sigma2()) / (s.sigma_n() + s.sigma2()) <= s.sigma + 1e-9, write_graph6(g));
  }
  o.note << "K3..K8, C4, Petersen, sigma inequality on " << count << " graphs";
}

void resilience_checks(Outcome& o) {
  o.require(toughness(petersen_graph()) == ExtRational(Rational(4, 3)), "petersen");
  const auto claw = toughness_report(star_graph(3));
  o.require(claw.toughness == ExtRational(Rational(1, 3)), "claw t");
  o.require(claw.t_prime == ExtRational(Rational(1, 2)), "claw t'");
  o.require(claw.scattering.value && *claw.scattering.value == 2, "claw s");
  for (int n = 1; n <= 8; ++n) o.require(toughness(complete_graph(n)).is_infinite(), "K" + std::to_string(n));
  int count = 0;
  for (int n = 3; n <= 6; ++n)
    for (const auto& g : collect_corpus(CorpusSpec::parse("exhaustive-connected:" + std::to_string(n)))) {
      if (g.is_complete()) continue;
      ++count;
      const auto r = toughness_report(g);
      o.require(r.toughness < r.t_prime, "t' > t on " + write_graph6(g));
      const auto ref = oracle::toughness(g);
      o.require(r.toughness == ExtRational(ref.t) && r.t_prime == ExtRational(ref.t_prime), write_graph6(g));
    }
  o.note << "t' > t on " << count << " connected non-complete graphs";
}

void near_tight(Outcome& o) {
  const Graph claw = star_graph(3);
  const Rational sq = separation_profile(claw).beta_sq_weak;
  o.require(sq == Rational(1, 3), "claw weak beta^2");
  const Surd beta = BetaValue::from_square(sq).surd();
  const Surd bound = bounds::weak_toughness_fraction(beta, 5, 11);
  const Surd t(Rational(1, 3));
  o.require(bound < t, "exact strict comparison");
  AuditOptions options;
  options.theorems = TheoremSelection::parse("weakly-tough-t");
  options.sources = BetaSources::Exact;
  double margin = -1;
  for (const auto& e : audit_graph(claw, options))
    if (e.beta_source == "exact_weak") {
      o.require(e.status() == EntryStatus::Pass, "audit entry");
      margin = e.margin;
    }
  o.require(margin > 5e-4 && margin < 7e-4, "margin");
  o.note << "bound " << bound.to_string() << " < 1/3, margin " << margin;
}

void graph6_round_trips(Outcome& o) {
  int count = 0;
  for (const auto& g : exhaustive(6)) {
    ++count;
    const std::string s = write_graph6(g);
    o.require(s == oracle::graph6_encode(g) && parse_graph6(s) == g, s);
  }
  Xoshiro256 rng(2024);
  for (int n : {20, 40, 63, 100})
    for (int i = 0; i < 250; ++i) {
      const Graph g = gen_gnp(n, 0.1 + 0.8 * (i % 5) / 4.0, rng);
      ++count;
      const std::string s = write_graph6(g);
      o.require(s == oracle::graph6_encode(g) && parse_graph6(s) == g, "random n=" + std::to_string(n));
    }
  o.require(parse_graph6("C~") == complete_graph(4), "C~");
  o.require(parse_graph6("Bw") == complete_graph(3), "Bw");
  o.note << count << " round trips, fixed vectors C~ and Bw";
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"blossom matches Berge-Tutte on exhaustive(6)", matching_oracle},
      {"fractional matching matches the fractional formula", fractional_oracle},
      {"maximal-Y reduction matches full enumeration, n <= 5", reduction},
      {"theorem audit sweep over connected graphs of order 5 and 6", audit_sweep},
      {"certificate soundness and tightness", certificate_soundness},
      {"mixing inequality sweep", mixing_sweep},
      {"spectral spot checks", spectral_checks},
      {"resilience spot checks", resilience_checks},
      {"claw near-tight weak toughness bound", near_tight},
      {"graph6 round trips", graph6_round_trips},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.note.str() << ")" << std::endl;
  }
  return failures;
}
