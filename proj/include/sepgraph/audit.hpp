#pragma once

#include "sepgraph/caps.hpp"
#include "sepgraph/generators.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/matching.hpp"
#include "sepgraph/resilience.hpp"
#include "sepgraph/separation.hpp"
#include "sepgraph/spectra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sepgraph {

enum class EntryStatus { Pass, Fail, Inapplicable, Skipped };
std::string to_string(EntryStatus status);

/// One theorem instance on one graph. `margin` is signed so that a
/// non-negative value (positive for strict relations under exact sources)
/// means the statement held.
struct AuditEntry {
  std::string theorem_id;
  std::string beta_source; ///< exact_weak, exact_strong, exact_bipartite, certificate:<kind>, spectrum, none
  bool applicable = false;
  bool skipped = false;
  std::string reason;
  std::string relation; ///< ">=", ">", "<=", "implies"
  double bound_value = 0;
  std::string bound_exact; ///< exact form when the source is exact
  std::string exact_value;
  double exact_numeric = 0;
  bool holds = true;
  double margin = 0;
  std::string detail;

  EntryStatus status() const;
};

struct TheoremInfo {
  std::string id;
  std::string group;
  std::string statement;
};

/// Every audited statement, in report order.
const std::vector<TheoremInfo>& theorem_catalog();

/// Selection by comma-separated tokens. A token matches a group name
/// (matching, bipartite, toughness, structure, spectra, mixing, all), an id,
/// or every id starting with "token-". Unknown tokens are a DomainError.
class TheoremSelection {
public:
  static TheoremSelection parse(const std::string& text);
  static TheoremSelection all() { return parse("all"); }
  bool contains(const std::string& id) const;
  bool any_in_group(const std::string& group) const;

private:
  std::vector<std::string> ids_;
};

enum class BetaSources { Exact, Certificates, Both };
BetaSources parse_beta_sources(const std::string& text);
std::string to_string(BetaSources sources);

struct AuditOptions {
  TheoremSelection theorems = TheoremSelection::all();
  BetaSources sources = BetaSources::Both;
  int max_exact_n = 18; ///< exact separation profiles and separator sweeps
  int max_tough_n = 20; ///< toughness, t', scattering
  std::uint64_t seed = 0;
  int mixing_samples = 10000;
  int mixing_exhaustive_n = 6;  ///< all subset pairs up to this order
  int mixing_disjoint_n = 14;   ///< all disjoint non-adjacent pairs up to this order
  bool keep_all_graphs = false; ///< keep passing graphs in AuditReport::graphs
};

/// Everything the audits consume, computed once per graph. Fields that
/// exceed their cap stay empty and produce skipped entries.
struct GraphFacts {
  Graph graph;
  SpectralSummary spectrum;
  std::vector<BetaCertificate> certificates;
  std::optional<SeparationProfile> profile;
  std::optional<Bipartition> sides; ///< U = smaller side (ties: the side of vertex 0)
  std::optional<BipartiteProfile> bipartite;
  MatchingReport matching;
  std::optional<ToughnessReport> toughness;
  std::string profile_skip_reason;
  std::string toughness_skip_reason;

  static GraphFacts compute(const Graph& g, const AuditOptions& options);
};

std::vector<AuditEntry> audit_matching(const GraphFacts& facts, const AuditOptions& options);
std::vector<AuditEntry> audit_bipartite(const GraphFacts& facts, const AuditOptions& options);
std::vector<AuditEntry> audit_toughness(const GraphFacts& facts, const AuditOptions& options);
std::vector<AuditEntry> audit_structure(const GraphFacts& facts, const AuditOptions& options);
std::vector<AuditEntry> audit_spectra(const GraphFacts& facts, const AuditOptions& options);
/// `index` decorrelates the sampling seed between graphs of one corpus.
std::vector<AuditEntry> audit_mixing(const GraphFacts& facts, const AuditOptions& options, std::uint64_t index = 0);

/// All selected audits for one graph, in catalog group order.
std::vector<AuditEntry> audit_graph(const Graph& g, const AuditOptions& options, std::uint64_t index = 0);

struct GraphAudit {
  std::uint64_t index = 0;
  std::string graph6;
  int order = 0;
  std::vector<AuditEntry> entries;
  std::string error; ///< set when the graph could not be audited at all
  int failures() const;
  int skipped() const;
};

struct TheoremSummary {
  std::string theorem_id;
  std::string beta_source;
  int pass = 0;
  int fail = 0;
  int inapplicable = 0;
  int skipped = 0;
  std::optional<double> min_margin; ///< over applicable entries
};

struct AuditReport {
  std::string corpus;
  std::vector<GraphAudit> graphs; ///< failing or skipped graphs, or all with keep_all_graphs
  std::vector<TheoremSummary> summary; ///< sorted by catalog order, then source
  int graph_count = 0;
  int entry_count = 0;
  int failure_count = 0;
  int skipped_count = 0;
};

/// Streams the corpus, audits each graph (in parallel when jobs > 1) and
/// aggregates. Output order is corpus order for any job count.
AuditReport run_corpus(const CorpusSpec& spec, const AuditOptions& options, int jobs = 1);
AuditReport run_audit(const std::vector<Graph>& graphs, const std::string& corpus, const AuditOptions& options,
                      int jobs = 1);

} // namespace sepgraph
