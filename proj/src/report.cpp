#include "sepgraph/report.hpp"

#include "sepgraph/graph6.hpp"

#include <cmath>
#include <sstream>

namespace sepgraph::report {

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Json rational(const Rational& r) { return r.to_string(); }

std::string beta_text(const Rational& beta_sq) {
  Rational root;
  if (beta_sq.exact_sqrt(root)) return root.to_string();
  return "sqrt(" + beta_sq.to_string() + ")";
}

Json vertex_set(const VertexSet& s) { return s.members(); }

Json subset_pair(const std::optional<SubsetPair>& pair) {
  if (!pair) return nullptr;
  return Json{{"x", vertex_set(pair->x)}, {"y", vertex_set(pair->y)}};
}

namespace {

Json numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

Json beta_block(const Rational& sq, const std::optional<SubsetPair>& witness) {
  return Json{{"beta_sq", rational(sq)},
              {"beta", beta_text(sq)},
              {"beta_numeric", number(std::sqrt(sq.to_double()))},
              {"witness", subset_pair(witness)}};
}

Json status_block(const char* status, const std::string& reason) {
  return Json{{"status", status}, {"reason", reason}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double v) {
  const Json j = number(v);
  return j.is_string() ? j.get<std::string>() : j.dump();
}

} // namespace

Json spectral(const SpectralSummary& s) {
  return Json{{"adjacency_eigenvalues", numbers(s.adjacency_eigs)},
              {"laplacian_eigenvalues", numbers(s.laplacian_eigs)},
              {"normalized_laplacian_eigenvalues", numbers(s.normalized_eigs)},
              {"lambda1", number(s.lambda1())},
              {"lambda", number(s.lambda)},
              {"mu2", number(s.mu2())},
              {"mu_n", number(s.mu_n())},
              {"sigma2", number(s.sigma2())},
              {"sigma_n", number(s.sigma_n())},
              {"sigma", number(s.sigma)},
              {"min_degree", s.min_degree},
              {"max_degree", s.max_degree},
              {"regular", s.is_regular},
              {"connected", s.is_connected},
              {"has_isolated_vertex", s.has_isolated_vertex}};
}

Json certificate(const BetaCertificate& c) {
  Json j{{"kind", to_string(c.kind)}, {"mode", to_string(c.mode)}, {"applicable", c.applicable}};
  if (c.applicable)
    j["value"] = number(c.value);
  else
    j["reason"] = c.reason;
  return j;
}

Json profile(const SeparationProfile& p) {
  return Json{{"status", "ok"},
              {"weak", beta_block(p.beta_sq_weak, p.weak_witness)},
              {"strong", beta_block(p.beta_sq_strong, p.strong_witness)}};
}

Json bipartite(const BipartiteProfile& p, const Bipartition& sides) {
  Json j{{"status", "ok"}, {"u", vertex_set(sides.left)}, {"w", vertex_set(sides.right)}};
  j.update(beta_block(p.beta_sq, p.witness));
  return j;
}

Json matching(const MatchingReport& m) {
  Json edges = Json::array();
  for (const auto& [u, v] : m.matching) edges.push_back(Json::array({u, v}));
  return Json{{"alpha_prime", m.alpha_prime},
              {"matching", edges},
              {"deficiency", m.deficiency},
              {"deficiency_set", vertex_set(m.deficiency_set)},
              {"has_perfect_matching", m.has_perfect},
              {"factor_critical", m.is_factor_critical},
              {"alpha_prime_frac", rational(m.alpha_prime_frac)},
              {"frac_deficiency", m.frac_deficiency},
              {"frac_deficiency_set", vertex_set(m.frac_deficiency_set)},
              {"has_fractional_perfect_matching", m.has_frac_perfect}};
}

Json toughness(const ToughnessReport& t) {
  auto witness = [&](const ExtRational& v, const VertexSet& w) -> Json {
    if (v.is_infinite()) return nullptr;
    return vertex_set(w);
  };
  return Json{{"status", "ok"},
              {"toughness", t.toughness.to_string()},
              {"toughness_witness", witness(t.toughness, t.toughness_witness)},
              {"t_prime", t.t_prime.to_string()},
              {"t_prime_witness", witness(t.t_prime, t.t_prime_witness)},
              {"scattering", t.scattering.value ? Json(*t.scattering.value) : Json("undefined")},
              {"scattering_witness", t.scattering.value ? vertex_set(t.scattering.witness) : Json(nullptr)}};
}

Json entry(const AuditEntry& e) {
  Json j{{"theorem_id", e.theorem_id},
         {"beta_source", e.beta_source},
         {"status", to_string(e.status())},
         {"applicable", e.applicable}};
  if (!e.reason.empty()) j["reason"] = e.reason;
  if (e.applicable && !e.skipped) {
    j["relation"] = e.relation;
    j["exact_value"] = e.exact_value;
    j["bound_value"] = number(e.bound_value);
    if (!e.bound_exact.empty()) j["bound_exact"] = e.bound_exact;
    j["holds"] = e.holds;
    j["margin"] = number(e.margin);
    if (!e.detail.empty()) j["detail"] = e.detail;
  }
  return j;
}

Json analysis(const GraphFacts& f) {
  const Graph& g = f.graph;
  Json j{{"graph6", write_graph6(g)}, {"order", g.order()}, {"size", g.size()}};
  j["spectral_summary"] = spectral(f.spectrum);
  Json certs = Json::array();
  for (const auto& c : f.certificates) certs.push_back(certificate(c));
  j["certificates"] = certs;
  j["profile"] = f.profile ? profile(*f.profile) : status_block("skipped", f.profile_skip_reason);
  if (!f.sides)
    j["bipartite_profile"] = status_block("inapplicable", "no bipartition with two nonempty sides");
  else if (f.bipartite)
    j["bipartite_profile"] = bipartite(*f.bipartite, *f.sides);
  else
    j["bipartite_profile"] = status_block("skipped", f.profile_skip_reason);
  j["matching"] = matching(f.matching);
  if (f.toughness)
    j["toughness"] = toughness(*f.toughness);
  else
    j["toughness"] = status_block(f.spectrum.is_connected ? "skipped" : "inapplicable", f.toughness_skip_reason);
  return j;
}

Json audit(const AuditReport& r) {
  Json j{{"corpus", r.corpus},
         {"totals",
          {{"graphs", r.graph_count},
           {"entries", r.entry_count},
           {"failures", r.failure_count},
           {"skipped", r.skipped_count}}}};
  Json summary = Json::array();
  for (const auto& s : r.summary)
    summary.push_back(Json{{"theorem_id", s.theorem_id},
                           {"beta_source", s.beta_source},
                           {"pass", s.pass},
                           {"fail", s.fail},
                           {"inapplicable", s.inapplicable},
                           {"skipped", s.skipped},
                           {"min_margin", s.min_margin ? number(*s.min_margin) : Json(nullptr)}});
  j["summary"] = summary;
  Json failures = Json::array();
  Json graphs = Json::array();
  for (const auto& ga : r.graphs) {
    Json entries = Json::array();
    for (const auto& e : ga.entries) {
      entries.push_back(entry(e));
      if (e.status() == EntryStatus::Fail) {
        Json f = entry(e);
        f["index"] = ga.index;
        f["graph6"] = ga.graph6;
        failures.push_back(f);
      }
    }
    Json g{{"index", ga.index}, {"graph6", ga.graph6}, {"order", ga.order}};
    if (!ga.error.empty()) g["error"] = ga.error;
    g["entries"] = entries;
    graphs.push_back(g);
  }
  j["failures"] = failures;
  j["graphs"] = graphs;
  return j;
}

std::string audit_csv(const AuditReport& r) {
  std::ostringstream out;
  out << "index,graph6,theorem_id,beta_source,status,relation,exact_value,bound_value,bound_exact,margin,reason,detail\n";
  for (const auto& ga : r.graphs)
    for (const auto& e : ga.entries) {
      const bool evaluated = e.applicable && !e.skipped;
      out << ga.index << ',' << csv_field(ga.graph6) << ',' << e.theorem_id << ',' << csv_field(e.beta_source) << ','
          << to_string(e.status()) << ',' << csv_field(evaluated ? e.relation : "") << ','
          << csv_field(evaluated ? e.exact_value : "") << ',' << (evaluated ? csv_number(e.bound_value) : "") << ','
          << csv_field(evaluated ? e.bound_exact : "") << ',' << (evaluated ? csv_number(e.margin) : "") << ','
          << csv_field(e.reason) << ',' << csv_field(evaluated ? e.detail : "") << '\n';
    }
  return out.str();
}

Json document(const std::string& command, const std::vector<std::string>& args, std::uint64_t seed) {
  return Json{{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"command", command},
              {"invocation", {{"args", args}, {"seed", seed}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace sepgraph::report
