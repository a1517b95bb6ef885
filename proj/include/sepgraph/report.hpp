#pragma once

#include "sepgraph/audit.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sepgraph {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

namespace report {

/// Finite doubles as numbers; infinities and NaN as "inf", "-inf", "nan".
Json number(double v);
Json rational(const Rational& r);
/// "p/q" when beta^2 is a rational square, otherwise "sqrt(p/q)".
std::string beta_text(const Rational& beta_sq);
Json vertex_set(const VertexSet& s);
Json subset_pair(const std::optional<SubsetPair>& pair);

Json spectral(const SpectralSummary& s);
Json certificate(const BetaCertificate& c);
Json profile(const SeparationProfile& p);
Json bipartite(const BipartiteProfile& p, const Bipartition& sides);
Json matching(const MatchingReport& m);
Json toughness(const ToughnessReport& t);
Json entry(const AuditEntry& e);

/// Everything `analyze` prints for one graph.
Json analysis(const GraphFacts& facts);

/// Summary, failures and per-graph entries (as retained by the report).
Json audit(const AuditReport& r);

/// One CSV row per retained entry, with a header line.
std::string audit_csv(const AuditReport& r);

/// Wraps a command payload with the schema and invocation header.
Json document(const std::string& command, const std::vector<std::string>& args, std::uint64_t seed);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

} // namespace report

} // namespace sepgraph
