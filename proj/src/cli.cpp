#include "sepgraph/cli.hpp"

#include "sepgraph/audit.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/graph6.hpp"
#include "sepgraph/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sepgraph {

namespace {

struct CapFlags {
  int max_exact_n = 18;
  int max_tough_n = 20;
  bool strict = false;

  CapFlags() {
    if (std::getenv("SSL_MAX_N")) {
      const Caps caps = Caps::defaults();
      max_exact_n = caps.exponential;
      max_tough_n = caps.toughness;
    }
  }

  void attach(CLI::App* cmd, bool toughness) {
    cmd->add_option("--max-exact-n", max_exact_n, "largest order for exact separation profiles")
        ->capture_default_str();
    if (toughness)
      cmd->add_option("--max-tough-n", max_tough_n, "largest order for toughness and scattering")
          ->capture_default_str();
    cmd->add_flag("--strict", strict, "exit 4 when a size cap skips any computation");
  }
};

std::vector<Graph6Line> read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_graph6_stream(in);
  std::ifstream file(path);
  if (!file) throw DomainError("cannot open '" + path + "'");
  return read_graph6_stream(file);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw DomainError("cannot write '" + path + "'");
  file << text;
}

bool cap_skip(const std::string& reason) { return reason.find("exceeds") != std::string::npos; }

int cmd_analyze(const std::vector<std::string>& args, const std::string& input, const CapFlags& caps,
                const std::string& output, std::istream& in, std::ostream& out) {
  const auto lines = read_input(input, in);
  AuditOptions options;
  options.max_exact_n = caps.max_exact_n;
  options.max_tough_n = caps.max_tough_n;
  Json doc = report::document("analyze", args, 0);
  Json graphs = Json::array();
  bool capped = false;
  for (const auto& line : lines) {
    const GraphFacts facts = GraphFacts::compute(line.graph, options);
    capped = capped || cap_skip(facts.profile_skip_reason) || cap_skip(facts.toughness_skip_reason);
    Json record{{"line", line.line_number}};
    record.update(report::analysis(facts));
    graphs.push_back(record);
  }
  doc["graphs"] = graphs;
  write_output(output, report::dump(doc), out);
  return caps.strict && capped ? kExitCapExceeded : kExitOk;
}

int cmd_certify(const std::vector<std::string>& args, const std::string& input, const std::string& beta_text,
                const std::string& mode, const CapFlags& flags, const std::string& output, std::istream& in,
                std::ostream& out) {
  const Rational beta_rational = Rational::parse(beta_text);
  const BetaValue beta = BetaValue::exact(beta_rational);
  const auto lines = read_input(input, in);
  Caps caps;
  caps.exponential = std::min(flags.max_exact_n, kMaskLimit);
  Json doc = report::document("certify", args, 0);
  doc["mode"] = mode;
  doc["beta"] = beta_rational.to_string();
  Json graphs = Json::array();
  bool capped = false;
  for (const auto& line : lines) {
    const Graph& g = line.graph;
    Json record{{"line", line.line_number}, {"graph6", write_graph6(g)}, {"order", g.order()}};
    if (g.order() > caps.exponential) {
      capped = true;
      record["status"] = "skipped";
      record["reason"] = "order " + std::to_string(g.order()) + " exceeds --max-exact-n " +
                         std::to_string(caps.exponential);
      graphs.push_back(record);
      continue;
    }
    MembershipResult result;
    if (mode == "weak") {
      result = is_weak_beta_graph(g, beta, caps);
    } else if (mode == "strong") {
      result = is_strong_beta_graph(g, beta, caps);
    } else {
      auto sides = bipartition_of(g);
      if (!sides || sides->left.empty() || sides->right.empty()) {
        record["status"] = "inapplicable";
        record["reason"] = "not bipartite with two nonempty sides";
        graphs.push_back(record);
        continue;
      }
      if (sides->right.size() < sides->left.size()) std::swap(sides->left, sides->right);
      record["u"] = report::vertex_set(sides->left);
      record["w"] = report::vertex_set(sides->right);
      result = is_bipartite_beta_graph(g, *sides, beta, caps);
    }
    record["status"] = result.holds ? "holds" : "fails";
    record["holds"] = result.holds;
    record["counterexample"] = report::subset_pair(result.counterexample);
    graphs.push_back(record);
  }
  doc["graphs"] = graphs;
  write_output(output, report::dump(doc), out);
  return flags.strict && capped ? kExitCapExceeded : kExitOk;
}

struct AuditFlags {
  std::string corpus;
  std::string theorems = "all";
  std::string beta_source = "exact";
  std::uint64_t seed = 0;
  int jobs = 1;
  bool full = false;
  bool csv = false;
  std::string output;
};

int cmd_audit(const std::vector<std::string>& args, const AuditFlags& a, const CapFlags& caps, std::ostream& out) {
  AuditOptions options;
  options.theorems = TheoremSelection::parse(a.theorems);
  options.sources = parse_beta_sources(a.beta_source);
  options.max_exact_n = caps.max_exact_n;
  options.max_tough_n = caps.max_tough_n;
  options.seed = a.seed;
  options.keep_all_graphs = a.full;
  const CorpusSpec spec = CorpusSpec::parse(a.corpus, a.seed);
  const AuditReport result = run_corpus(spec, options, std::max(1, a.jobs));
  if (a.csv) {
    write_output(a.output, report::audit_csv(result), out);
  } else {
    Json doc = report::document("audit", args, a.seed);
    doc["options"] = Json{{"theorems", a.theorems},
                          {"beta_source", to_string(options.sources)},
                          {"max_exact_n", options.max_exact_n},
                          {"max_tough_n", options.max_tough_n},
                          {"full", a.full}};
    doc.update(report::audit(result));
    write_output(a.output, report::dump(doc), out);
  }
  if (result.failure_count > 0) return kExitAuditFailure;
  if (caps.strict && result.skipped_count > 0) return kExitCapExceeded;
  return kExitOk;
}

struct GenFlags {
  std::vector<std::string> words;
  std::string corpus;
  std::uint64_t seed = 0;
  int count = 1;
};

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError("expected an integer, got '" + s + "'");
  return v;
}

int cmd_gen(const GenFlags& f, std::ostream& out) {
  std::string corpus = f.corpus;
  if (corpus.empty()) {
    if (f.words.empty()) throw DomainError("gen needs a family or --corpus");
    const std::string& family = f.words[0];
    const std::vector<std::string> rest(f.words.begin() + 1, f.words.end());
    if (family == "random-regular" || family == "gnp") {
      if (rest.size() != 2) throw DomainError(family + " takes two parameters");
      if (f.count < 0) throw DomainError("--count must be non-negative");
      corpus = family + ":" + rest[0] + "," + rest[1] + "," + std::to_string(f.count) + "," + std::to_string(f.seed);
    } else {
      std::vector<int> params;
      for (const auto& w : rest) params.push_back(parse_int(w));
      out << write_graph6(gen_named(family, params)) << '\n';
      return kExitOk;
    }
  }
  CorpusStream stream(CorpusSpec::parse(corpus, f.seed));
  while (auto g = stream.next()) out << write_graph6(*g) << '\n';
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"separation-parameter graph toolkit", "sepgraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string input = "-", output;
  CapFlags caps;

  auto* analyze = app.add_subcommand("analyze", "spectra, certificates, profiles, matching and toughness per graph");
  analyze->add_option("input", input, "graph6 file, or - for stdin")->capture_default_str();
  analyze->add_flag("--json", "JSON output (the default)");
  analyze->add_option("-o,--output", output, "write to a file instead of stdout");
  caps.attach(analyze, true);

  std::string beta, mode;
  auto* certify = app.add_subcommand("certify", "decide (weak, strong or bipartite) beta-membership");
  certify->add_option("input", input, "graph6 file, or - for stdin")->capture_default_str();
  certify->add_option("--beta", beta, "beta >= 0 as a decimal or p/q")->required();
  certify->add_option("--mode", mode, "weak, strong or bipartite")
      ->required()
      ->check(CLI::IsMember({"weak", "strong", "bipartite"}));
  certify->add_option("-o,--output", output, "write to a file instead of stdout");
  caps.attach(certify, false);

  AuditFlags af;
  auto* audit = app.add_subcommand("audit", "evaluate theorem bounds over a corpus");
  audit->add_option("--corpus", af.corpus, "corpus spec, e.g. exhaustive-connected:5")->required();
  audit->add_option("--theorems", af.theorems, "comma-separated ids or groups, or all")->capture_default_str();
  audit->add_option("--beta-source", af.beta_source, "exact, certs or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "certs", "both"}));
  audit->add_option("--seed", af.seed, "seed for random corpora and mixing samples")->capture_default_str();
  audit->add_option("--jobs", af.jobs, "worker threads")->capture_default_str();
  audit->add_flag("--full", af.full, "keep entries of passing graphs");
  audit->add_flag("--csv", af.csv, "CSV projection of the entries instead of JSON");
  audit->add_option("-o,--output", af.output, "write to a file instead of stdout");
  caps.attach(audit, true);

  GenFlags gf;
  auto* gen = app.add_subcommand("gen", "print graphs as graph6 lines");
  gen->add_option("family", gf.words, "family name followed by its parameters");
  gen->add_option("--corpus", gf.corpus, "emit a whole corpus spec instead");
  gen->add_option("--seed", gf.seed, "seed for random families")->capture_default_str();
  gen->add_option("--count", gf.count, "number of random graphs")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(args, input, caps, output, in, out);
    if (certify->parsed()) return cmd_certify(args, input, beta, mode, caps, output, in, out);
    if (audit->parsed()) return cmd_audit(args, af, caps, out);
    if (gen->parsed()) return cmd_gen(gf, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

} // namespace sepgraph
