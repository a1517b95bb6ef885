#include "sepgraph/audit.hpp"

#include "sepgraph/bounds.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/graph6.hpp"
#include "sepgraph/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>
#include <type_traits>

namespace sepgraph {

namespace {

constexpr double kCertificateEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string show(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string show_mask(std::uint64_t mask, int n) { return VertexSet::from_mask(n, mask).to_string(); }

const std::vector<TheoremInfo> kCatalog = {
    {"main1", "matching", "alpha' >= min{(1-beta)/(1+beta), 1/2}(n-1) for weakly (n,beta)-graphs"},
    {"main1-pm", "matching", "weakly (n,beta) with n even and 0 < beta <= 1/3 has a perfect matching"},
    {"main2", "matching", "alpha' >= min{(2-beta)/(2(1+beta)), 1/2}(n-1) for (n,beta)-graphs"},
    {"main2-pm", "matching", "(n,beta) with n even and 0 < beta <= 1/2 has a perfect matching"},
    {"main5-weak", "matching", "weakly (n,beta) with n odd and 0 < beta <= 1/3 is factor-critical"},
    {"main5-strong", "matching", "(n,beta) with n odd and 0 < beta <= 1/2 is factor-critical"},
    {"fracpm-weak", "matching", "weakly (n,beta) with 0 < beta <= 1/3 has a fractional perfect matching"},
    {"fracpm-strong", "matching", "(n,beta) with 0 < beta <= 1/2 has a fractional perfect matching"},
    {"newt3-i", "matching", "mu_2 >= r mu_n with 0 < r <= 1/2 gives alpha'_f >= r n"},
    {"newt3-ii", "matching", "mu_2 >= r mu_n and alpha' != (n-1)/2 give alpha' >= r n"},
    {"refinement", "matching", "(n,beta) with alpha' != (n-1)/2 gives alpha' >= min{(2-beta)/(2(1+beta)), 1/2} n"},
    {"cor-matnum", "matching", "alpha' >= min{ceil(mu_2/mu_n (n-1)), ceil((n-1)/2)}"},
    {"cor-matnum-pm", "matching",
     "2 mu_2 >= mu_n: perfect matching (n even), factor-critical (n odd), fractional perfect matching"},
    {"cor-lap", "matching",
     "2 delta >= mu_2 + mu_n gives alpha' >= min{ceil((3 mu_2 + mu_n)/(4 mu_n) (n-1)), ceil((n-1)/2)}"},
    {"cor-lap-pm", "matching",
     "2 delta >= mu_2 + mu_n and 3 mu_2 >= mu_n: perfect matching (n even), factor-critical (n odd)"},
    {"cor-regular", "matching",
     "(n,d,lambda)-graphs: alpha' >= min{ceil((3(d-lambda)/(4(d+lambda)) + 1/4)(n-1)), ceil((n-1)/2)}"},
    {"main3", "bipartite", "weakly (n,beta) bipartite with |W| >= t|U|: alpha' >= min{t(1-2beta^2), 1}|U|"},
    {"main4", "bipartite", "(n,beta) bipartite without isolated vertices: alpha' >= min{1/beta^2, 1}|U|"},
    {"main4-complete", "bipartite", "(n,0) bipartite graphs saturate U"},
    {"bip-profile", "bipartite", "connected (U,W,beta)-bipartite with |W| >= t|U|, beta > 0: alpha' >= min{t/beta^2, 1}|U|"},
    {"bip-profile-spectral", "bipartite",
     "connected bipartite: alpha' >= min{t delta_1 delta_2/((1-sigma_2)^2 Delta_1 Delta_2), 1}|U|"},
    {"cor-bip-lap", "bipartite",
     "bipartite: alpha' >= min{t(4 mu_n mu_2 - (mu_n - mu_2)^2)/(mu_n + mu_2)^2, 1}|U|"},
    {"cor-afg19", "bipartite",
     "|W| >= s|U|/(s-2) and mu_n <= (sqrt(s)+1)/(sqrt(s)-1) mu_2 give a matching saturating U"},
    {"cor-bip-delta", "bipartite", "bipartite with 2 delta >= mu_2 + mu_n has a matching saturating U"},
    {"tough-main", "toughness", "connected (n,beta)-graphs have t >= (1-beta)/beta"},
    {"cor-tough-lap", "toughness", "connected with 2 delta >= mu_2 + mu_n: t >= 2 mu_2/(mu_n - mu_2)"},
    {"cor-tough-norm", "toughness", "connected: t >= delta/(sigma Delta) - 1"},
    {"weakly-tough-tprime", "toughness", "connected weakly (n,beta): t' > (1-beta)/(2 beta)"},
    {"weakly-tough-t", "toughness", "connected weakly (n,beta): t > 5(1-beta)/(11 beta)"},
    {"weakly-tough-eps", "toughness",
     "connected weakly (n,beta) with 2 eps n >= (1/2-eps)(1-beta)/beta + 1: t > (1/2-eps)(1-beta)/beta"},
    {"remark-n6", "toughness", "connected weakly (n,beta) with n >= 6: t > 6(1-beta)/(13 beta)"},
    {"scattering-strong", "toughness", "(n,beta): s <= max{(2beta-1)n/(1+beta), 0}"},
    {"scattering-weak", "toughness", "weakly (n,beta): s <= max{((3beta-1)n + 2(1-beta))/(beta+1), 0}"},
    {"lemma22-x", "structure", "|X| <= beta n/(1+beta) for the canonical split of every separator"},
    {"lemma22-s", "structure", "|S| >= ((1-beta)/beta)|X| for the canonical split of every separator"},
    {"lemma23-weak-s", "structure", "weakly (n,beta), 0 < beta < 1: |S| > (c-1)(1-beta)/(2 beta)"},
    {"lemma23-weak-scatter", "structure",
     "weakly (n,beta), 0 < beta < 1: c - |S| < max{((3beta-1)n + 2(1-beta))/(beta+1), 0}"},
    {"lemma23-strong-c", "structure", "(n,beta): c <= beta n/(1+beta)"},
    {"lemma23-strong-scatter", "structure", "(n,beta): c - |S| <= max{(2beta-1)n/(1+beta), 0}"},
    {"lemma23-strong-isolated", "structure",
     "(n,beta), c-1 isolated components, |V-S| >= 2 beta n/(1+beta): |S| > 2(c-1)/(beta(1+beta))"},
    {"cert-adj-regular", "spectra", "(n,d,lambda)-graphs are (n, lambda/d)-graphs"},
    {"cert-lap-weak", "spectra", "every graph is weakly (n, (mu_n - mu_2)/(mu_n + mu_2))"},
    {"cert-lap-strong", "spectra", "2 delta >= mu_2 + mu_n gives an (n, (mu_n - mu_2)/(mu_n + mu_2))-graph"},
    {"cert-norm-strong", "spectra", "no isolated vertices gives an (n, sigma Delta/delta)-graph"},
    {"cert-norm-weak", "spectra",
     "connected, n >= 2 gives a weakly (n, (sigma_n - sigma_2)/(sigma_n + sigma_2) Delta/delta)-graph"},
    {"cert-bipartite-butler", "spectra",
     "connected bipartite graphs are (U,W,(1-sigma_2) sqrt(Delta_1 Delta_2/(delta_1 delta_2)))-bipartite"},
    {"remark-sigma", "spectra", "(sigma_n - sigma_2)/(sigma_n + sigma_2) <= sigma"},
    {"mixing-fc2", "mixing", "Laplacian expander mixing over subset pairs"},
    {"mixing-fc", "mixing", "normalized Laplacian expander mixing over subset pairs"},
    {"mixing-n2t", "mixing", "volume-ratio bound for disjoint non-adjacent pairs in connected graphs"},
    {"mixing-eml", "mixing", "expander mixing lemma for regular graphs"},
};

const char* const kGroups[] = {"matching", "bipartite", "toughness", "structure", "spectra", "mixing"};

// ---------------------------------------------------------------------------
// Beta sources

struct Source {
  std::string label;
  bool exact = false;
  Surd surd;
  double value = 0;

  bool zero() const { return exact ? surd.sign() == 0 : value == 0.0; }
  double numeric() const { return exact ? surd.to_double() : value; }
  std::string text() const { return exact ? surd.to_string() : show(value); }
  bool at_most(const Rational& r) const {
    return exact ? !(Surd(r) < surd) : value <= r.to_double() + kBetaSlack;
  }
};

Source exact_source(std::string label, const Rational& beta_sq) {
  Source s;
  s.label = std::move(label);
  s.exact = true;
  s.surd = Surd::sqrt(beta_sq);
  return s;
}

Source certificate_source(const BetaCertificate& cert) {
  Source s;
  s.label = "certificate:" + to_string(cert.kind);
  s.value = cert.value;
  return s;
}

struct SourceList {
  std::vector<Source> list;
  std::string exact_label;
  std::string exact_skip; ///< non-empty when the exact source was requested but unavailable
};

bool wants_exact(const AuditOptions& o) { return o.sources != BetaSources::Certificates; }
bool wants_certs(const AuditOptions& o) { return o.sources != BetaSources::Exact; }

SourceList sources_for(const GraphFacts& f, BetaMode mode, const AuditOptions& o) {
  SourceList out;
  if (wants_exact(o)) {
    if (mode == BetaMode::Bipartite) {
      out.exact_label = "exact_bipartite";
      if (f.bipartite)
        out.list.push_back(exact_source(out.exact_label, f.bipartite->beta_sq));
      else
        out.exact_skip = f.profile ? "no bipartition with two nonempty sides" : f.profile_skip_reason;
    } else {
      const bool weak = mode == BetaMode::Weak;
      out.exact_label = weak ? "exact_weak" : "exact_strong";
      if (f.profile)
        out.list.push_back(
            exact_source(out.exact_label, weak ? f.profile->beta_sq_weak : f.profile->beta_sq_strong));
      else
        out.exact_skip = f.profile_skip_reason;
    }
  }
  if (wants_certs(o)) {
    for (const auto& cert : f.certificates) {
      if (!cert.applicable) continue;
      // Strong certificates also bound the weak parameter.
      const bool usable = cert.mode == mode || (mode == BetaMode::Weak && cert.mode == BetaMode::Strong);
      if (usable) out.list.push_back(certificate_source(cert));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Entry construction

struct Quantity {
  enum Kind { Finite, Infinite, Undefined } kind = Finite;
  Rational value;
  std::string text;

  static Quantity integer(long long v) { return {Finite, Rational(v), std::to_string(v)}; }
  static Quantity rational(const Rational& r) { return {Finite, r, r.to_string()}; }
  static Quantity extended(const ExtRational& r) {
    if (r.is_infinite()) return {Infinite, Rational(0), "inf"};
    return rational(r.value());
  }
  static Quantity scattering(const Scattering& s) {
    if (!s.value) return {Undefined, Rational(0), "undefined"};
    return integer(*s.value);
  }
  double numeric() const {
    if (kind == Infinite) return kInf;
    if (kind == Undefined) return std::numeric_limits<double>::quiet_NaN();
    return value.to_double();
  }
};

enum class Rel { Ge, Gt, Le, Lt };

const char* rel_text(Rel r) {
  switch (r) {
  case Rel::Ge: return ">=";
  case Rel::Gt: return ">";
  case Rel::Le: return "<=";
  case Rel::Lt: return "<";
  }
  return "?";
}

AuditEntry base_entry(const std::string& id, const std::string& source) {
  AuditEntry e;
  e.theorem_id = id;
  e.beta_source = source;
  return e;
}

AuditEntry inapplicable(const std::string& id, const std::string& source, std::string reason) {
  AuditEntry e = base_entry(id, source);
  e.reason = std::move(reason);
  return e;
}

AuditEntry skipped(const std::string& id, const std::string& source, std::string reason) {
  AuditEntry e = base_entry(id, source);
  e.skipped = true;
  e.reason = std::move(reason);
  return e;
}

template <class T>
AuditEntry compare(const std::string& id, const Source& src, Rel rel, const Quantity& q, const T& bound,
                   std::string detail = {}) {
  AuditEntry e = base_entry(id, src.label);
  e.applicable = true;
  e.relation = rel_text(rel);
  e.exact_value = q.text;
  e.exact_numeric = q.numeric();
  e.detail = std::move(detail);
  if constexpr (std::is_same_v<T, Surd>) {
    e.bound_value = bound.to_double();
    e.bound_exact = bound.to_string();
  } else {
    e.bound_value = bound;
  }
  const bool upper = rel == Rel::Le || rel == Rel::Lt;
  const bool strict = rel == Rel::Gt || rel == Rel::Lt;
  if (q.kind == Quantity::Infinite) {
    e.holds = !upper;
    e.margin = upper ? -kInf : kInf;
    return e;
  }
  if (q.kind == Quantity::Undefined) {
    e.holds = true;
    e.margin = kInf;
    if (!e.detail.empty()) e.detail += "; ";
    e.detail += "vacuous: no disconnecting set";
    return e;
  }
  if constexpr (std::is_same_v<T, Surd>) {
    const Surd diff = upper ? bound - Surd(q.value) : Surd(q.value) - bound;
    const int sign = diff.sign();
    e.holds = strict ? sign > 0 : sign >= 0;
    e.margin = diff.to_double();
  } else {
    const double diff = upper ? bound - q.value.to_double() : q.value.to_double() - bound;
    const double eps = src.exact ? 0.0 : kCertificateEps;
    e.holds = strict ? diff > -eps : diff >= -eps;
    e.margin = diff;
  }
  return e;
}

/// Evaluates `f` at the source's beta (Surd or double) and compares.
template <class F>
AuditEntry bound_entry(const std::string& id, const Source& src, Rel rel, const Quantity& q, F&& f,
                       std::string detail = {}) {
  if (src.exact) return compare(id, src, rel, q, f(src.surd), std::move(detail));
  return compare(id, src, rel, q, f(src.value), std::move(detail));
}

/// Spectral bounds are always floating point.
AuditEntry spectral_entry(const std::string& id, Rel rel, const Quantity& q, double bound, std::string detail = {}) {
  Source s;
  s.label = "spectrum";
  return compare(id, s, rel, q, bound, std::move(detail));
}

AuditEntry implication(const std::string& id, const std::string& source, bool conclusion, std::string what) {
  AuditEntry e = base_entry(id, source);
  e.applicable = true;
  e.relation = "implies";
  e.bound_exact = "true";
  e.bound_value = 1;
  e.exact_value = conclusion ? "true" : "false";
  e.exact_numeric = conclusion ? 1 : 0;
  e.holds = conclusion;
  e.margin = conclusion ? 0 : -1;
  e.detail = std::move(what);
  return e;
}

AuditEntry vacuous(const std::string& id, const std::string& source, std::string detail) {
  AuditEntry e = base_entry(id, source);
  e.applicable = true;
  e.relation = ">=";
  e.exact_value = "inf";
  e.exact_numeric = kInf;
  e.bound_exact = "inf";
  e.bound_value = kInf;
  e.holds = true;
  e.margin = kInf;
  e.detail = std::move(detail);
  return e;
}

/// Shared per-call state: the selection filter and the output list.
struct Emitter {
  const AuditOptions& options;
  std::vector<AuditEntry> out;

  bool want(const char* id) const { return options.theorems.contains(id); }
  void add(AuditEntry e) { out.push_back(std::move(e)); }

  /// Gates every selected id of `group` off with one reason.
  void gate_group(const char* group, const std::string& reason) {
    for (const auto& info : kCatalog)
      if (info.group == group && want(info.id.c_str())) add(inapplicable(info.id, "none", reason));
  }
  void skip_group(const char* group, const std::string& reason) {
    for (const auto& info : kCatalog)
      if (info.group == group && want(info.id.c_str())) add(skipped(info.id, "none", reason));
  }
  /// One skipped entry per id when the exact source was unavailable.
  void skip_exact(const SourceList& sources, std::initializer_list<const char*> ids) {
    if (sources.exact_skip.empty()) return;
    for (const char* id : ids)
      if (want(id)) add(skipped(id, sources.exact_label, sources.exact_skip));
  }
};

long long ceil_tol(double x) { return static_cast<long long>(std::ceil(x - kCertificateEps)); }

bool spectral_ge(double a, double b) { return a + kSpectralGateTolerance >= b; }

std::string edgeless_reason() { return "edgeless graph"; }

} // namespace

// ---------------------------------------------------------------------------

std::string to_string(EntryStatus status) {
  switch (status) {
  case EntryStatus::Pass: return "pass";
  case EntryStatus::Fail: return "fail";
  case EntryStatus::Inapplicable: return "inapplicable";
  case EntryStatus::Skipped: return "skipped";
  }
  return "?";
}

EntryStatus AuditEntry::status() const {
  if (skipped) return EntryStatus::Skipped;
  if (!applicable) return EntryStatus::Inapplicable;
  return holds ? EntryStatus::Pass : EntryStatus::Fail;
}

const std::vector<TheoremInfo>& theorem_catalog() { return kCatalog; }

TheoremSelection TheoremSelection::parse(const std::string& text) {
  TheoremSelection sel;
  std::vector<char> chosen(kCatalog.size(), 0);
  std::size_t start = 0;
  bool any = false;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(start, comma - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    start = comma + 1;
    if (token.empty()) continue;
    any = true;
    bool matched = false;
    for (std::size_t i = 0; i < kCatalog.size(); ++i) {
      const auto& info = kCatalog[i];
      if (token == "all" || token == info.group || token == info.id ||
          info.id.rfind(token + "-", 0) == 0) {
        chosen[i] = 1;
        matched = true;
      }
    }
    if (!matched) throw DomainError("unknown theorem selector '" + token + "'");
  }
  if (!any) throw DomainError("empty theorem selection");
  for (std::size_t i = 0; i < kCatalog.size(); ++i)
    if (chosen[i]) sel.ids_.push_back(kCatalog[i].id);
  return sel;
}

bool TheoremSelection::contains(const std::string& id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

bool TheoremSelection::any_in_group(const std::string& group) const {
  for (const auto& info : kCatalog)
    if (info.group == group && contains(info.id)) return true;
  return false;
}

BetaSources parse_beta_sources(const std::string& text) {
  if (text == "exact") return BetaSources::Exact;
  if (text == "certs" || text == "certificates") return BetaSources::Certificates;
  if (text == "both") return BetaSources::Both;
  throw DomainError("beta source must be exact, certs or both, got '" + text + "'");
}

std::string to_string(BetaSources sources) {
  switch (sources) {
  case BetaSources::Exact: return "exact";
  case BetaSources::Certificates: return "certs";
  case BetaSources::Both: return "both";
  }
  return "?";
}

GraphFacts GraphFacts::compute(const Graph& g, const AuditOptions& options) {
  GraphFacts f;
  f.graph = g;
  f.spectrum = spectral_summary(g);
  f.certificates = beta_certificates(g, f.spectrum);
  const int n = g.order();
  Caps caps;
  caps.exponential = std::min(options.max_exact_n, kMaskLimit);
  caps.toughness = std::min(options.max_tough_n, kMaskLimit);

  if (auto bip = bipartition_of(g); bip && !bip->left.empty() && !bip->right.empty()) {
    if (bip->right.size() < bip->left.size()) std::swap(bip->left, bip->right);
    f.sides = *bip;
  }
  if (n <= caps.exponential) {
    f.profile = separation_profile(g, caps);
    if (f.sides) f.bipartite = bipartite_profile(g, *f.sides, caps);
  } else {
    f.profile_skip_reason = "order " + std::to_string(n) + " exceeds --max-exact-n " + std::to_string(caps.exponential);
  }
  f.matching = matching_report(g);
  if (!f.spectrum.is_connected) {
    f.toughness_skip_reason = "disconnected graph";
  } else if (n <= caps.toughness) {
    f.toughness = toughness_report(g, caps);
  } else {
    f.toughness_skip_reason = "order " + std::to_string(n) + " exceeds --max-tough-n " + std::to_string(caps.toughness);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Matching

std::vector<AuditEntry> audit_matching(const GraphFacts& facts, const AuditOptions& options) {
  Emitter em{options, {}};
  const Graph& g = facts.graph;
  const MatchingReport& mr = facts.matching;
  const int n = g.order();
  if (g.size() == 0) {
    em.gate_group("matching", edgeless_reason());
    return std::move(em.out);
  }
  const Quantity alpha = Quantity::integer(mr.alpha_prime);
  const bool even = n % 2 == 0;
  const bool near_half = 2 * mr.alpha_prime == n - 1;
  const Rational third(1, 3), half(1, 2);

  const SourceList weak = sources_for(facts, BetaMode::Weak, options);
  em.skip_exact(weak, {"main1", "main1-pm", "main5-weak", "fracpm-weak"});
  for (const Source& src : weak.list) {
    if (em.want("main1"))
      em.add(bound_entry("main1", src, Rel::Ge, alpha, [&](const auto& b) { return bounds::weak_matching(b, n); }));
    if (em.want("main1-pm")) {
      if (!even)
        em.add(inapplicable("main1-pm", src.label, "n odd"));
      else if (!src.at_most(third))
        em.add(inapplicable("main1-pm", src.label, "beta > 1/3"));
      else
        em.add(implication("main1-pm", src.label, mr.has_perfect, "perfect matching"));
    }
    if (em.want("main5-weak")) {
      if (even)
        em.add(inapplicable("main5-weak", src.label, "n even"));
      else if (!src.at_most(third))
        em.add(inapplicable("main5-weak", src.label, "beta > 1/3"));
      else
        em.add(implication("main5-weak", src.label, mr.is_factor_critical, "factor-critical"));
    }
    if (em.want("fracpm-weak")) {
      if (!src.at_most(third))
        em.add(inapplicable("fracpm-weak", src.label, "beta > 1/3"));
      else
        em.add(implication("fracpm-weak", src.label, mr.has_frac_perfect, "fractional perfect matching"));
    }
  }

  const SourceList strong = sources_for(facts, BetaMode::Strong, options);
  em.skip_exact(strong, {"main2", "main2-pm", "main5-strong", "fracpm-strong", "refinement"});
  for (const Source& src : strong.list) {
    if (em.want("main2"))
      em.add(bound_entry("main2", src, Rel::Ge, alpha, [&](const auto& b) { return bounds::strong_matching(b, n); }));
    if (em.want("main2-pm")) {
      if (!even)
        em.add(inapplicable("main2-pm", src.label, "n odd"));
      else if (!src.at_most(half))
        em.add(inapplicable("main2-pm", src.label, "beta > 1/2"));
      else
        em.add(implication("main2-pm", src.label, mr.has_perfect, "perfect matching"));
    }
    if (em.want("main5-strong")) {
      if (even)
        em.add(inapplicable("main5-strong", src.label, "n even"));
      else if (!src.at_most(half))
        em.add(inapplicable("main5-strong", src.label, "beta > 1/2"));
      else
        em.add(implication("main5-strong", src.label, mr.is_factor_critical, "factor-critical"));
    }
    if (em.want("fracpm-strong")) {
      if (!src.at_most(half))
        em.add(inapplicable("fracpm-strong", src.label, "beta > 1/2"));
      else
        em.add(implication("fracpm-strong", src.label, mr.has_frac_perfect, "fractional perfect matching"));
    }
    if (em.want("refinement")) {
      if (near_half)
        em.add(inapplicable("refinement", src.label, "alpha' = (n-1)/2"));
      else
        em.add(bound_entry("refinement", src, Rel::Ge, alpha,
                           [&](const auto& b) { return bounds::strong_matching_refined(b, n); }));
    }
  }

  const SpectralSummary& s = facts.spectrum;
  const double mu2 = s.mu2(), mun = s.mu_n();
  const long long half_ceil = n / 2; // ceil((n-1)/2)
  const std::string spec = "spectrum";

  if (em.want("newt3-i") || em.want("newt3-ii")) {
    const double r = std::min(mu2 / mun, 0.5);
    const std::string detail = "r=" + show(r);
    if (em.want("newt3-i")) {
      if (!(mu2 > kSpectralGateTolerance))
        em.add(inapplicable("newt3-i", spec, "mu_2 = 0"));
      else
        em.add(spectral_entry("newt3-i", Rel::Ge, Quantity::rational(mr.alpha_prime_frac), r * n, detail));
    }
    if (em.want("newt3-ii")) {
      if (!(mu2 > kSpectralGateTolerance))
        em.add(inapplicable("newt3-ii", spec, "mu_2 = 0"));
      else if (near_half)
        em.add(inapplicable("newt3-ii", spec, "alpha' = (n-1)/2"));
      else
        em.add(spectral_entry("newt3-ii", Rel::Ge, alpha, r * n, detail));
    }
  }
  if (em.want("cor-matnum")) {
    const long long bound = std::min(ceil_tol(mu2 / mun * (n - 1)), half_ceil);
    em.add(spectral_entry("cor-matnum", Rel::Ge, alpha, static_cast<double>(bound)));
  }
  const bool pm_or_fc = (even ? mr.has_perfect : mr.is_factor_critical) && mr.has_frac_perfect;
  const std::string pm_what =
      std::string(even ? "perfect matching" : "factor-critical") + " and fractional perfect matching";
  if (em.want("cor-matnum-pm")) {
    if (!spectral_ge(2 * mu2, mun))
      em.add(inapplicable("cor-matnum-pm", spec, "2 mu_2 < mu_n"));
    else
      em.add(implication("cor-matnum-pm", spec, pm_or_fc, pm_what));
  }
  const bool lap_gate = spectral_ge(2.0 * s.min_degree, mu2 + mun);
  if (em.want("cor-lap")) {
    if (!lap_gate) {
      em.add(inapplicable("cor-lap", spec, "2 delta < mu_2 + mu_n"));
    } else {
      const long long bound = std::min(ceil_tol((3 * mu2 + mun) / (4 * mun) * (n - 1)), half_ceil);
      em.add(spectral_entry("cor-lap", Rel::Ge, alpha, static_cast<double>(bound)));
    }
  }
  if (em.want("cor-lap-pm")) {
    if (!lap_gate)
      em.add(inapplicable("cor-lap-pm", spec, "2 delta < mu_2 + mu_n"));
    else if (!spectral_ge(3 * mu2, mun))
      em.add(inapplicable("cor-lap-pm", spec, "3 mu_2 < mu_n"));
    else
      em.add(implication("cor-lap-pm", spec, pm_or_fc, pm_what));
  }
  if (em.want("cor-regular")) {
    if (!s.is_regular) {
      em.add(inapplicable("cor-regular", spec, "not regular"));
    } else {
      const double d = s.max_degree, lambda = s.lambda;
      const double rate = 3 * (d - lambda) / (4 * (d + lambda)) + 0.25;
      const long long bound = std::min(ceil_tol(rate * (n - 1)), half_ceil);
      em.add(spectral_entry("cor-regular", Rel::Ge, alpha, static_cast<double>(bound), "lambda=" + show(lambda)));
    }
  }
  return std::move(em.out);
}

// ---------------------------------------------------------------------------
// Bipartite

namespace {

struct SideDegrees {
  int min_u = 0, max_u = 0, min_w = 0, max_w = 0;
};

SideDegrees side_degrees(const Graph& g, const Bipartition& b) {
  SideDegrees d;
  d.min_u = d.min_w = g.order();
  for (int v : b.left.members()) {
    d.min_u = std::min(d.min_u, g.degree(v));
    d.max_u = std::max(d.max_u, g.degree(v));
  }
  for (int v : b.right.members()) {
    d.min_w = std::min(d.min_w, g.degree(v));
    d.max_w = std::max(d.max_w, g.degree(v));
  }
  return d;
}

} // namespace

std::vector<AuditEntry> audit_bipartite(const GraphFacts& facts, const AuditOptions& options) {
  Emitter em{options, {}};
  const Graph& g = facts.graph;
  if (g.size() == 0) {
    em.gate_group("bipartite", edgeless_reason());
    return std::move(em.out);
  }
  if (!facts.sides) {
    em.gate_group("bipartite", "not bipartite");
    return std::move(em.out);
  }
  const Bipartition& sides = *facts.sides;
  const int u = sides.left.size(), w = sides.right.size();
  const Rational side_ratio(w, u);
  const Quantity alpha = Quantity::integer(facts.matching.alpha_prime);
  const bool saturated = facts.matching.alpha_prime == u;
  const std::string detail = "|U|=" + std::to_string(u) + " |W|=" + std::to_string(w);

  const SourceList weak = sources_for(facts, BetaMode::Weak, options);
  em.skip_exact(weak, {"main3"});
  if (em.want("main3"))
    for (const Source& src : weak.list)
      em.add(bound_entry("main3", src, Rel::Ge, alpha, [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        return bounds::bipartite_weak(b, bounds::lift<T>(side_ratio), u);
      }, detail));

  const SourceList strong = sources_for(facts, BetaMode::Strong, options);
  em.skip_exact(strong, {"main4"});
  if (em.want("main4") || em.want("main4-complete"))
    for (const Source& src : strong.list) {
      if (src.zero()) {
        if (em.want("main4-complete")) em.add(implication("main4-complete", src.label, saturated, "U saturated"));
        if (em.want("main4")) em.add(inapplicable("main4", src.label, "beta = 0"));
        continue;
      }
      if (em.want("main4-complete")) em.add(inapplicable("main4-complete", src.label, "beta > 0"));
      if (!em.want("main4")) continue;
      if (g.has_isolated_vertex())
        em.add(inapplicable("main4", src.label, "isolated vertex"));
      else
        em.add(bound_entry("main4", src, Rel::Ge, alpha,
                           [&](const auto& b) { return bounds::bipartite_strong(b, u); }, detail));
    }

  const bool connected = facts.spectrum.is_connected;
  const SourceList bip = sources_for(facts, BetaMode::Bipartite, options);
  em.skip_exact(bip, {"bip-profile"});
  if (em.want("bip-profile"))
    for (const Source& src : bip.list) {
      if (!connected)
        em.add(inapplicable("bip-profile", src.label, "disconnected graph"));
      else if (src.zero())
        em.add(inapplicable("bip-profile", src.label, "beta = 0"));
      else
        em.add(bound_entry("bip-profile", src, Rel::Ge, alpha, [&](const auto& b) {
          using T = std::decay_t<decltype(b)>;
          return bounds::bipartite_profile_matching(b, bounds::lift<T>(side_ratio), u);
        }, detail));
    }

  const SpectralSummary& s = facts.spectrum;
  const double t = side_ratio.to_double();
  const double mu2 = s.mu2(), mun = s.mu_n();
  const std::string spec = "spectrum";
  if (em.want("bip-profile-spectral")) {
    if (!connected) {
      em.add(inapplicable("bip-profile-spectral", spec, "disconnected graph"));
    } else {
      const SideDegrees d = side_degrees(g, sides);
      const double gap = 1 - s.sigma2();
      const double ratio = static_cast<double>(d.min_u) * d.min_w / (static_cast<double>(d.max_u) * d.max_w);
      const double rate = gap * gap < 1e-300 ? 1.0 : std::min(ratio * t / (gap * gap), 1.0);
      em.add(spectral_entry("bip-profile-spectral", Rel::Ge, alpha, rate * u, detail));
    }
  }
  if (em.want("cor-bip-lap")) {
    const double value = t * (4 * mun * mu2 - (mun - mu2) * (mun - mu2)) / ((mun + mu2) * (mun + mu2));
    em.add(spectral_entry("cor-bip-lap", Rel::Ge, alpha, std::min(value, 1.0) * u, detail));
  }
  if (em.want("cor-afg19")) {
    if (!(w > u)) {
      em.add(inapplicable("cor-afg19", spec, "|W| = |U|"));
    } else {
      const double sv = 2 * t / (t - 1), root = std::sqrt(sv);
      if (!spectral_ge((root + 1) / (root - 1) * mu2, mun))
        em.add(inapplicable("cor-afg19", spec, "mu_n > (sqrt(s)+1)/(sqrt(s)-1) mu_2"));
      else
        em.add(implication("cor-afg19", spec, saturated, "U saturated; s=" + show(sv)));
    }
  }
  if (em.want("cor-bip-delta")) {
    if (!spectral_ge(2.0 * s.min_degree, mu2 + mun))
      em.add(inapplicable("cor-bip-delta", spec, "2 delta < mu_2 + mu_n"));
    else
      em.add(implication("cor-bip-delta", spec, saturated, "U saturated"));
  }
  return std::move(em.out);
}

// ---------------------------------------------------------------------------
// Toughness

std::vector<AuditEntry> audit_toughness(const GraphFacts& facts, const AuditOptions& options) {
  Emitter em{options, {}};
  const Graph& g = facts.graph;
  const int n = g.order();
  if (g.size() == 0) {
    em.gate_group("toughness", edgeless_reason());
    return std::move(em.out);
  }
  if (!facts.spectrum.is_connected) {
    em.gate_group("toughness", "disconnected graph");
    return std::move(em.out);
  }
  if (!facts.toughness) {
    em.skip_group("toughness", facts.toughness_skip_reason);
    return std::move(em.out);
  }
  const ToughnessReport& tr = *facts.toughness;
  const Quantity t = Quantity::extended(tr.toughness);
  const Quantity tp = Quantity::extended(tr.t_prime);
  const Quantity sc = Quantity::scattering(tr.scattering);
  const std::string complete = "complete graph: t = inf";

  const SourceList strong = sources_for(facts, BetaMode::Strong, options);
  em.skip_exact(strong, {"tough-main", "scattering-strong"});
  for (const Source& src : strong.list) {
    if (em.want("tough-main")) {
      if (src.zero())
        em.add(vacuous("tough-main", src.label, complete));
      else
        em.add(bound_entry("tough-main", src, Rel::Ge, t, [](const auto& b) { return bounds::strong_toughness(b); }));
    }
    if (em.want("scattering-strong"))
      em.add(bound_entry("scattering-strong", src, Rel::Le, sc,
                         [&](const auto& b) { return bounds::strong_scattering(b, n); }));
  }

  const SourceList weak = sources_for(facts, BetaMode::Weak, options);
  em.skip_exact(weak, {"weakly-tough-tprime", "weakly-tough-t", "weakly-tough-eps", "remark-n6", "scattering-weak"});
  const Rational eps_values[] = {Rational(1, 10), Rational(1, 20)};
  for (const Source& src : weak.list) {
    if (src.zero()) {
      for (const char* id : {"weakly-tough-tprime", "weakly-tough-t", "weakly-tough-eps", "remark-n6"})
        if (em.want(id)) em.add(vacuous(id, src.label, complete));
    } else {
      if (em.want("weakly-tough-tprime"))
        em.add(bound_entry("weakly-tough-tprime", src, Rel::Gt, tp, [](const auto& b) { return bounds::weak_t_prime(b); }));
      if (em.want("weakly-tough-t"))
        em.add(bound_entry("weakly-tough-t", src, Rel::Gt, t,
                           [](const auto& b) { return bounds::weak_toughness_fraction(b, 5, 11); }));
      if (em.want("weakly-tough-eps"))
        for (const Rational& eps : eps_values) {
          const std::string detail = "eps=" + eps.to_string();
          const bool gate = src.exact ? bounds::weak_toughness_eps_condition(src.surd, eps, n)
                                      : bounds::weak_toughness_eps_condition(src.value, eps, n);
          if (!gate)
            em.add(inapplicable("weakly-tough-eps", src.label, "2 eps n < (1/2-eps)(1-beta)/beta + 1; " + detail));
          else
            em.add(bound_entry("weakly-tough-eps", src, Rel::Gt, t,
                               [&](const auto& b) { return bounds::weak_toughness_eps(b, eps); }, detail));
        }
      if (em.want("remark-n6")) {
        if (n < 6)
          em.add(inapplicable("remark-n6", src.label, "n < 6"));
        else
          em.add(bound_entry("remark-n6", src, Rel::Gt, t,
                             [](const auto& b) { return bounds::weak_toughness_fraction(b, 6, 13); }));
      }
    }
    if (em.want("scattering-weak"))
      em.add(bound_entry("scattering-weak", src, Rel::Le, sc,
                         [&](const auto& b) { return bounds::weak_scattering(b, n); }));
  }

  const SpectralSummary& s = facts.spectrum;
  const double mu2 = s.mu2(), mun = s.mu_n();
  if (em.want("cor-tough-lap")) {
    if (!spectral_ge(2.0 * s.min_degree, mu2 + mun))
      em.add(inapplicable("cor-tough-lap", "spectrum", "2 delta < mu_2 + mu_n"));
    else
      em.add(spectral_entry("cor-tough-lap", Rel::Ge, t, mun - mu2 > 1e-12 ? 2 * mu2 / (mun - mu2) : kInf));
  }
  if (em.want("cor-tough-norm")) {
    const double bound = s.sigma > 1e-12 ? s.min_degree / (s.sigma * s.max_degree) - 1 : kInf;
    em.add(spectral_entry("cor-tough-norm", Rel::Ge, t, bound, "sigma=" + show(s.sigma)));
  }
  return std::move(em.out);
}

// ---------------------------------------------------------------------------
// Structure

std::vector<AuditEntry> audit_structure(const GraphFacts& facts, const AuditOptions& options) {
  Emitter em{options, {}};
  if (!options.theorems.any_in_group("structure")) return {};
  const Graph& g = facts.graph;
  const int n = g.order();
  if (!wants_exact(options)) return {};
  if (g.size() == 0) {
    em.gate_group("structure", edgeless_reason());
    return std::move(em.out);
  }
  if (g.is_complete()) {
    em.gate_group("structure", "complete graph: no separators");
    return std::move(em.out);
  }
  if (!facts.profile) {
    em.skip_group("structure", facts.profile_skip_reason);
    return std::move(em.out);
  }
  const BetaValue weak = BetaValue::from_square(facts.profile->beta_sq_weak);
  const BetaValue strong = BetaValue::from_square(facts.profile->beta_sq_strong);
  const SeparatorChecker checker(n, weak, strong);

  struct Tally {
    Tally(const char* i, bool w) : id(i), weak_source(w) {}
    const char* id;
    bool weak_source;
    int checked = 0;
    bool holds = true;
    double worst = kInf;
    std::uint64_t worst_s = 0;
    std::string expression;
    bool strict = false;
  };
  Tally tallies[] = {{"lemma22-x", true},        {"lemma22-s", true},
                     {"lemma23-weak-s", true},   {"lemma23-weak-scatter", true},
                     {"lemma23-strong-c", false}, {"lemma23-strong-scatter", false},
                     {"lemma23-strong-isolated", false}};
  auto record = [](Tally& t, const Assertion& a, std::uint64_t s) {
    if (a.skipped) {
      if (t.expression.empty()) t.expression = a.expression;
      return;
    }
    ++t.checked;
    t.expression = a.expression;
    t.strict = a.strict;
    const bool first_failure = t.holds && !a.holds;
    if (!a.holds) t.holds = false;
    if (first_failure || (a.holds == t.holds && a.margin < t.worst)) {
      t.worst = a.margin;
      t.worst_s = s;
    }
  };

  const std::vector<std::uint64_t> rows = g.row_masks();
  const std::uint64_t full = bits::full_mask(n);
  int separators = 0;
  for (std::uint64_t s = 0; s < full; ++s) {
    const std::uint64_t rest = full & ~s;
    std::vector<std::uint64_t> comps = masks::components(rows, rest);
    const int c = static_cast<int>(comps.size());
    if (c < 2) continue;
    ++separators;
    const int s_size = bits::popcount(s);
    std::stable_sort(comps.begin(), comps.end(),
                     [](std::uint64_t a, std::uint64_t b) { return bits::popcount(a) < bits::popcount(b); });
    int x_size = 0, isolated = 0;
    for (int i = 0; i < c; ++i) {
      if (i < c / 2) x_size += bits::popcount(comps[i]);
      if (bits::popcount(comps[i]) == 1) ++isolated;
    }
    record(tallies[0], checker.lemma22_x(x_size), s);
    record(tallies[1], checker.lemma22_s(s_size, x_size), s);
    record(tallies[2], checker.lemma23_weak_s(s_size, c), s);
    record(tallies[3], checker.lemma23_weak_scatter(s_size, c), s);
    record(tallies[4], checker.lemma23_strong_c(c), s);
    record(tallies[5], checker.lemma23_strong_scatter(s_size, c), s);
    record(tallies[6], checker.lemma23_strong_isolated(s_size, c, isolated), s);
  }

  for (const Tally& t : tallies) {
    if (!em.want(t.id)) continue;
    const std::string label = t.weak_source ? "exact_weak" : "exact_strong";
    if (t.checked == 0) {
      em.add(inapplicable(t.id, label, separators == 0 ? "no separators" : "premise never met: " + t.expression));
      continue;
    }
    AuditEntry e = base_entry(t.id, label);
    e.applicable = true;
    e.relation = t.strict ? "strict" : "non-strict";
    e.bound_exact = (t.weak_source ? weak : strong).to_string();
    e.bound_value = (t.weak_source ? weak : strong).to_double();
    e.exact_value = show(t.worst);
    e.exact_numeric = t.worst;
    e.holds = t.holds;
    e.margin = t.worst;
    e.detail = t.expression + "; checked " + std::to_string(t.checked) + " of " + std::to_string(separators) +
               " separators; worst S=" + show_mask(t.worst_s, n);
    em.add(std::move(e));
  }
  return std::move(em.out);
}

// ---------------------------------------------------------------------------
// Certificates and the spectral remark

std::vector<AuditEntry> audit_spectra(const GraphFacts& facts, const AuditOptions& options) {
  Emitter em{options, {}};
  const auto id_of = [](CertificateKind k) {
    switch (k) {
    case CertificateKind::AdjRegular: return "cert-adj-regular";
    case CertificateKind::LapWeak: return "cert-lap-weak";
    case CertificateKind::LapStrong: return "cert-lap-strong";
    case CertificateKind::NormStrong: return "cert-norm-strong";
    case CertificateKind::NormWeak: return "cert-norm-weak";
    case CertificateKind::BipartiteButler: return "cert-bipartite-butler";
    }
    return "?";
  };
  for (const BetaCertificate& cert : facts.certificates) {
    const char* id = id_of(cert.kind);
    if (!em.want(id)) continue;
    const std::string label = "certificate:" + to_string(cert.kind);
    if (!cert.applicable) {
      em.add(inapplicable(id, label, cert.reason));
      continue;
    }
    std::optional<Rational> beta_sq;
    if (cert.mode == BetaMode::Bipartite) {
      if (facts.bipartite) beta_sq = facts.bipartite->beta_sq;
    } else if (facts.profile) {
      beta_sq = cert.mode == BetaMode::Weak ? facts.profile->beta_sq_weak : facts.profile->beta_sq_strong;
    }
    if (!beta_sq) {
      em.add(skipped(id, label, facts.profile ? "no bipartite profile" : facts.profile_skip_reason));
      continue;
    }
    const Surd exact = Surd::sqrt(*beta_sq);
    AuditEntry e = base_entry(id, label);
    e.applicable = true;
    e.relation = "<=";
    e.exact_value = exact.to_string();
    e.exact_numeric = exact.to_double();
    e.bound_value = cert.value;
    e.margin = cert.value - e.exact_numeric;
    e.holds = e.margin >= -kCertificateEps;
    e.detail = "exact " + to_string(cert.mode) + " beta <= certificate";
    em.add(std::move(e));
  }
  if (em.want("remark-sigma")) {
    const SpectralSummary& s = facts.spectrum;
    if (facts.graph.size() == 0 || facts.graph.order() < 2) {
      em.add(inapplicable("remark-sigma", "spectrum", edgeless_reason()));
    } else {
      const double lhs = (s.sigma_n() - s.sigma2()) / (s.sigma_n() + s.sigma2());
      AuditEntry e = base_entry("remark-sigma", "spectrum");
      e.applicable = true;
      e.relation = "<=";
      e.exact_value = show(lhs);
      e.exact_numeric = lhs;
      e.bound_value = s.sigma;
      e.margin = s.sigma - lhs;
      e.holds = e.margin >= -kCertificateEps;
      em.add(std::move(e));
    }
  }
  return std::move(em.out);
}

// ---------------------------------------------------------------------------
// Mixing

namespace {

struct MixTally {
  long long pairs = 0;
  bool holds = true;
  double worst = kInf;
  MixingResult at_worst;
  std::uint64_t wx = 0, wy = 0;

  void add(const MixingResult& r, std::uint64_t x, std::uint64_t y) {
    ++pairs;
    const double margin = r.rhs - r.lhs;
    if (!r.holds) holds = false;
    if (margin < worst) {
      worst = margin;
      at_worst = r;
      wx = x;
      wy = y;
    }
  }

  AuditEntry entry(const char* id, int n, const std::string& family) const {
    AuditEntry e = base_entry(id, "spectrum");
    e.applicable = true;
    e.relation = "<=";
    e.exact_value = show(at_worst.lhs);
    e.exact_numeric = at_worst.lhs;
    e.bound_value = at_worst.rhs;
    e.margin = worst;
    e.holds = holds;
    e.detail = std::to_string(pairs) + " " + family + " pairs; worst X=" + show_mask(wx, n) + " Y=" + show_mask(wy, n);
    return e;
  }
};

} // namespace

std::vector<AuditEntry> audit_mixing(const GraphFacts& facts, const AuditOptions& options, std::uint64_t index) {
  Emitter em{options, {}};
  if (!options.theorems.any_in_group("mixing")) return {};
  const Graph& g = facts.graph;
  const SpectralSummary& s = facts.spectrum;
  const int n = g.order();
  if (n > kMaskLimit) {
    em.skip_group("mixing", "order exceeds 64");
    return std::move(em.out);
  }
  if (g.size() == 0) {
    em.gate_group("mixing", edgeless_reason());
    return std::move(em.out);
  }
  const std::vector<std::uint64_t> rows = g.row_masks();
  const std::uint64_t full = bits::full_mask(n);
  std::vector<long long> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  const long long vol_g = 2LL * g.size();
  auto vol = [&](std::uint64_t m) {
    long long total = 0;
    bits::for_each(m, [&](int v) { total += deg[v]; });
    return total;
  };
  auto e_between = [&](std::uint64_t x, std::uint64_t y) {
    long long total = 0;
    bits::for_each(x, [&](int v) { total += bits::popcount(rows[v] & y); });
    return total;
  };

  const bool do_fc2 = em.want("mixing-fc2"), do_fc = em.want("mixing-fc");
  const bool regular = s.is_regular && s.max_degree > 0;
  const bool do_eml = em.want("mixing-eml") && regular;
  const bool do_n2t = em.want("mixing-n2t") && s.is_connected && n >= 2;
  MixTally fc2, fc, eml_general, n2t, eml_disjoint;

  auto general = [&](std::uint64_t x, std::uint64_t y) {
    const long long exy = e_between(x, y);
    const int xs = bits::popcount(x), ys = bits::popcount(y);
    if (do_fc2) {
      const std::uint64_t both = x & y;
      fc2.add(mixing::laplacian(s, n, exy, xs, ys, bits::popcount(both), vol(both)), x, y);
    }
    if (do_fc) fc.add(mixing::normalized(s, exy, vol(x), vol(y), vol_g), x, y);
    if (do_eml) eml_general.add(mixing::regular(s, n, s.max_degree, exy, xs, ys), x, y);
  };
  if (do_fc2 || do_fc || do_eml) {
    if (n <= options.mixing_exhaustive_n) {
      for (std::uint64_t x = 0; x <= full; ++x)
        for (std::uint64_t y = 0; y <= full; ++y) general(x, y);
    } else {
      Xoshiro256 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
      for (int i = 0; i < options.mixing_samples; ++i) {
        const std::uint64_t x = rng.next() & full;
        const std::uint64_t y = rng.next() & full;
        general(x, y);
      }
    }
  }

  // Disjoint, non-adjacent, nonempty pairs.
  auto disjoint = [&](std::uint64_t x, std::uint64_t y) {
    if (do_n2t) n2t.add(mixing::butler(s, vol(x), vol(y), vol_g), x, y);
    if (do_eml) eml_disjoint.add(mixing::regular(s, n, s.max_degree, 0, bits::popcount(x), bits::popcount(y)), x, y);
  };
  std::string disjoint_family = "disjoint non-adjacent";
  if (do_n2t || do_eml) {
    if (n <= options.mixing_disjoint_n) {
      for (std::uint64_t x = 1; x <= full; ++x) {
        const std::uint64_t free = full & ~(x | masks::neighborhood(rows, x));
        for (std::uint64_t y = free; y; y = (y - 1) & free) disjoint(x, y);
      }
    } else {
      disjoint_family = "sampled disjoint non-adjacent";
      Xoshiro256 rng(options.seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
      for (int i = 0; i < options.mixing_samples; ++i) {
        const std::uint64_t x = (rng.next() & full) | (std::uint64_t{1} << rng.below(n));
        const std::uint64_t free = full & ~(x | masks::neighborhood(rows, x));
        if (!free) continue;
        const std::uint64_t y = rng.next() & free;
        if (y) disjoint(x, y);
      }
    }
  }

  const std::string general_family = n <= options.mixing_exhaustive_n ? "subset" : "sampled subset";
  if (do_fc2) em.add(fc2.entry("mixing-fc2", n, general_family));
  if (do_fc) em.add(fc.entry("mixing-fc", n, general_family));
  if (em.want("mixing-n2t")) {
    if (!do_n2t)
      em.add(inapplicable("mixing-n2t", "spectrum", "disconnected graph"));
    else if (n2t.pairs == 0)
      em.add(inapplicable("mixing-n2t", "spectrum", "no disjoint non-adjacent pairs"));
    else
      em.add(n2t.entry("mixing-n2t", n, disjoint_family));
  }
  if (em.want("mixing-eml")) {
    if (!regular) {
      em.add(inapplicable("mixing-eml", "spectrum", "not regular"));
    } else {
      em.add(eml_general.entry("mixing-eml", n, general_family));
      if (eml_disjoint.pairs > 0) em.add(eml_disjoint.entry("mixing-eml", n, disjoint_family));
    }
  }
  return std::move(em.out);
}

// ---------------------------------------------------------------------------
// Driver

std::vector<AuditEntry> audit_graph(const Graph& g, const AuditOptions& options, std::uint64_t index) {
  const GraphFacts facts = GraphFacts::compute(g, options);
  std::vector<AuditEntry> all;
  auto append = [&](std::vector<AuditEntry> part) {
    for (auto& e : part) all.push_back(std::move(e));
  };
  for (const char* group : kGroups) {
    if (!options.theorems.any_in_group(group)) continue;
    const std::string_view gname = group;
    if (gname == "matching") append(audit_matching(facts, options));
    else if (gname == "bipartite") append(audit_bipartite(facts, options));
    else if (gname == "toughness") append(audit_toughness(facts, options));
    else if (gname == "structure") append(audit_structure(facts, options));
    else if (gname == "spectra") append(audit_spectra(facts, options));
    else append(audit_mixing(facts, options, index));
  }
  return all;
}

int GraphAudit::failures() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.status() == EntryStatus::Fail; }));
}

int GraphAudit::skipped() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const AuditEntry& e) { return e.status() == EntryStatus::Skipped; }));
}

namespace {

GraphAudit audit_one(const Graph& g, const AuditOptions& options, std::uint64_t index) {
  GraphAudit ga;
  ga.index = index;
  ga.graph6 = write_graph6(g);
  ga.order = g.order();
  try {
    ga.entries = audit_graph(g, options, index);
  } catch (const ResourceError& e) {
    ga.error = e.what();
    ga.entries.push_back(skipped("all", "none", e.what()));
  } catch (const std::exception& e) {
    ga.error = e.what();
    AuditEntry failed = base_entry("all", "none");
    failed.applicable = true;
    failed.holds = false;
    failed.margin = -1;
    failed.reason = std::string("audit error: ") + e.what();
    ga.entries.push_back(std::move(failed));
  }
  return ga;
}

void audit_batch(const std::vector<Graph>& batch, std::uint64_t first_index, const AuditOptions& options, int jobs,
                 std::vector<GraphAudit>& out) {
  out.assign(batch.size(), GraphAudit{});
  if (jobs <= 1 || batch.size() <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = audit_one(batch[i], options, first_index + i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < batch.size();)
      out[i] = audit_one(batch[i], options, first_index + i);
  };
  std::vector<std::thread> threads;
  const int count = std::min<int>(jobs, static_cast<int>(batch.size()));
  for (int t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
}

class Summarizer {
public:
  Summarizer() {
    for (std::size_t i = 0; i < kCatalog.size(); ++i) rank_[kCatalog[i].id] = i;
  }

  void absorb(AuditReport& report, GraphAudit ga, bool keep_all) {
    ++report.graph_count;
    for (const AuditEntry& e : ga.entries) {
      ++report.entry_count;
      auto it = rank_.find(e.theorem_id);
      const std::size_t r = it == rank_.end() ? kCatalog.size() : it->second;
      TheoremSummary& s = table_[{r, e.beta_source}];
      s.theorem_id = e.theorem_id;
      s.beta_source = e.beta_source;
      switch (e.status()) {
      case EntryStatus::Pass: ++s.pass; break;
      case EntryStatus::Fail: ++s.fail; ++report.failure_count; break;
      case EntryStatus::Inapplicable: ++s.inapplicable; break;
      case EntryStatus::Skipped: ++s.skipped; ++report.skipped_count; break;
      }
      if (e.applicable && !e.skipped && std::isfinite(e.margin))
        s.min_margin = s.min_margin ? std::min(*s.min_margin, e.margin) : e.margin;
    }
    if (keep_all || ga.failures() > 0 || ga.skipped() > 0 || !ga.error.empty()) report.graphs.push_back(std::move(ga));
  }

  void finish(AuditReport& report) {
    for (auto& [key, s] : table_) report.summary.push_back(std::move(s));
  }

private:
  std::map<std::string, std::size_t> rank_;
  std::map<std::pair<std::size_t, std::string>, TheoremSummary> table_;
};

} // namespace

AuditReport run_audit(const std::vector<Graph>& graphs, const std::string& corpus, const AuditOptions& options,
                      int jobs) {
  AuditReport report;
  report.corpus = corpus;
  std::vector<GraphAudit> audited;
  audit_batch(graphs, 0, options, jobs, audited);
  Summarizer sum;
  for (auto& ga : audited) sum.absorb(report, std::move(ga), options.keep_all_graphs);
  sum.finish(report);
  return report;
}

AuditReport run_corpus(const CorpusSpec& spec, const AuditOptions& options, int jobs) {
  AuditReport report;
  report.corpus = spec.to_string();
  CorpusStream stream(spec);
  const std::size_t chunk = static_cast<std::size_t>(std::max(1, jobs)) * 64;
  std::vector<Graph> batch;
  std::vector<GraphAudit> audited;
  Summarizer sum;
  std::uint64_t index = 0;
  for (;;) {
    batch.clear();
    while (batch.size() < chunk) {
      auto g = stream.next();
      if (!g) break;
      batch.push_back(std::move(*g));
    }
    if (batch.empty()) break;
    audit_batch(batch, index, options, jobs, audited);
    for (auto& ga : audited) sum.absorb(report, std::move(ga), options.keep_all_graphs);
    index += batch.size();
  }
  sum.finish(report);
  return report;
}

} // namespace sepgraph
