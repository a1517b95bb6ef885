#include "sepgraph/generators.hpp"

#include "sepgraph/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace sepgraph {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int f = 2; static_cast<long long>(f) * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

/// Splits on commas that are not nested in parentheses.
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

long long parse_integer(std::string_view s, const std::string& what) {
  std::string t = trim(s);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw DomainError("invalid integer for " + what + ": '" + t + "'");
  return v;
}

double parse_real(std::string_view s, const std::string& what) {
  std::string t = trim(s);
  std::istringstream in(t);
  double v = 0;
  in >> v;
  if (!in || !in.eof()) throw DomainError("invalid number for " + what + ": '" + t + "'");
  return v;
}

std::string normalize_family(std::string_view name) {
  std::string out = trim(name);
  std::replace(out.begin(), out.end(), '-', '_');
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

} // namespace

Graph complete_graph(int n) {
  require(n >= 0, "complete(n) requires n >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle(n) requires n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path(n) requires n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 0 && b >= 0 && a + b >= 1, "complete_bipartite(a,b) requires a,b >= 0 and a+b >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star(k) requires k >= 1");
  return complete_bipartite_graph(1, leaves);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, edges);
}

Graph hypercube_graph(int dimension) {
  require(dimension >= 0 && dimension <= 16, "hypercube(d) requires 0 <= d <= 16");
  const int n = 1 << dimension;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dimension; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return Graph(n, edges);
}

Graph paley_graph(int q) {
  require(is_prime(q) && q % 4 == 1, "paley(q) requires a prime q = 1 (mod 4), got " + std::to_string(q));
  std::vector<char> residue(static_cast<std::size_t>(q), 0);
  for (long long x = 1; x < q; ++x) residue[static_cast<std::size_t>(x * x % q)] = 1;
  std::vector<Edge> edges;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (residue[static_cast<std::size_t>(v - u)]) edges.emplace_back(u, v);
  return Graph(q, edges);
}

Graph gen_named(std::string_view family, const std::vector<int>& params) {
  const std::string name = normalize_family(family);
  auto arity = [&](std::size_t k) {
    require(params.size() == k, name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "complete") { arity(1); return complete_graph(params[0]); }
  if (name == "cycle") { arity(1); return cycle_graph(params[0]); }
  if (name == "path") { arity(1); return path_graph(params[0]); }
  if (name == "complete_bipartite") { arity(2); return complete_bipartite_graph(params[0], params[1]); }
  if (name == "star") { arity(1); return star_graph(params[0]); }
  if (name == "petersen") { arity(0); return petersen_graph(); }
  if (name == "hypercube") { arity(1); return hypercube_graph(params[0]); }
  if (name == "paley") { arity(1); return paley_graph(params[0]); }
  throw DomainError("unknown graph family '" + std::string(family) + "'");
}

Graph gen_named(std::string_view expression) {
  const std::string expr = trim(expression);
  const auto open = expr.find('(');
  if (open == std::string::npos) return gen_named(expr, {});
  require(expr.back() == ')', "malformed family expression '" + expr + "'");
  std::vector<int> params;
  const std::string inner = expr.substr(open + 1, expr.size() - open - 2);
  if (!trim(inner).empty())
    for (const auto& part : split_top_level(inner))
      params.push_back(static_cast<int>(parse_integer(part, expr)));
  return gen_named(expr.substr(0, open), params);
}

Graph gen_random_regular(int n, int d, Xoshiro256& rng, int max_attempts) {
  require(n >= 1 && d >= 0, "random-regular requires n >= 1 and d >= 0");
  require(d < n, "random-regular requires d < n");
  require((static_cast<long long>(n) * d) % 2 == 0, "random-regular requires n*d even");
  const std::size_t points = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  std::vector<int> half_edges(points);
  std::vector<char> used(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < points; ++i) half_edges[i] = static_cast<int>(i / static_cast<std::size_t>(d));
    for (std::size_t i = points; i > 1; --i) std::swap(half_edges[i - 1], half_edges[rng.below(i)]);
    std::fill(used.begin(), used.end(), 0);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points && simple; i += 2) {
      int u = half_edges[i];
      int v = half_edges[i + 1];
      char& slot = used[static_cast<std::size_t>(u) * n + v];
      if (u == v || slot) {
        simple = false;
        break;
      }
      slot = 1;
      used[static_cast<std::size_t>(v) * n + u] = 1;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (simple) return Graph(n, edges);
  }
  throw RetryableError("random-regular(" + std::to_string(n) + "," + std::to_string(d) + ") rejected " +
                       std::to_string(max_attempts) + " configurations");
}

Graph gen_random_regular(int n, int d, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  return gen_random_regular(n, d, rng);
}

Graph gen_gnp(int n, double p, Xoshiro256& rng) {
  require(n >= 0, "gnp requires n >= 0");
  require(p >= 0.0 && p <= 1.0, "gnp requires 0 <= p <= 1");
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng.uniform() < p) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph graph_from_code(int n, std::uint64_t code) {
  require(n >= 0 && n * (n - 1) / 2 <= 64, "graph_from_code supports at most 64 vertex pairs");
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((code >> k) & 1U) edges.emplace_back(i, j);
  return Graph(n, edges);
}

CorpusSpec CorpusSpec::parse(std::string_view text, std::uint64_t default_seed) {
  std::vector<std::string> pieces;
  {
    std::string_view rest = text;
    for (auto bar = rest.find('|'); bar != std::string_view::npos; bar = rest.find('|')) {
      pieces.push_back(trim(rest.substr(0, bar)));
      rest.remove_prefix(bar + 1);
    }
    pieces.push_back(trim(rest));
  }
  CorpusSpec spec;
  spec.seed = default_seed;
  const std::string& head = pieces.front();
  const auto colon = head.find(':');
  require(colon != std::string::npos, "corpus spec must look like kind:args, got '" + head + "'");
  const std::string kind = trim(std::string_view(head).substr(0, colon));
  const std::string args = head.substr(colon + 1);
  const auto fields = split_top_level(args);

  if (kind == "exhaustive" || kind == "exhaustive-connected") {
    require(fields.size() == 1, kind + " takes one argument");
    spec.kind = kind == "exhaustive" ? Kind::Exhaustive : Kind::ExhaustiveConnected;
    spec.n = static_cast<int>(parse_integer(fields[0], kind));
    require(spec.n >= 0 && spec.n <= kMaxExhaustiveOrder,
            kind + " supports 0 <= n <= " + std::to_string(kMaxExhaustiveOrder));
  } else if (kind == "random-regular") {
    require(fields.size() == 3 || fields.size() == 4, "random-regular takes N,D,COUNT[,SEED]");
    spec.kind = Kind::RandomRegular;
    spec.n = static_cast<int>(parse_integer(fields[0], kind));
    spec.d = static_cast<int>(parse_integer(fields[1], kind));
    spec.count = static_cast<int>(parse_integer(fields[2], kind));
    if (fields.size() == 4) spec.seed = static_cast<std::uint64_t>(parse_integer(fields[3], kind));
    require(spec.count >= 0, "random-regular count must be >= 0");
    require(spec.n >= 1 && spec.d >= 0 && spec.d < spec.n && (spec.n * spec.d) % 2 == 0,
            "random-regular requires n >= 1, 0 <= d < n and n*d even");
  } else if (kind == "gnp") {
    require(fields.size() == 3 || fields.size() == 4, "gnp takes N,P,COUNT[,SEED]");
    spec.kind = Kind::Gnp;
    spec.n = static_cast<int>(parse_integer(fields[0], kind));
    spec.p = parse_real(fields[1], kind);
    spec.count = static_cast<int>(parse_integer(fields[2], kind));
    if (fields.size() == 4) spec.seed = static_cast<std::uint64_t>(parse_integer(fields[3], kind));
    require(spec.n >= 0 && spec.p >= 0.0 && spec.p <= 1.0 && spec.count >= 0, "gnp requires n >= 0, 0 <= p <= 1");
  } else if (kind == "named") {
    spec.kind = Kind::Named;
    spec.names = fields;
    for (const auto& name : spec.names) gen_named(name); // validate eagerly
  } else {
    throw DomainError("unknown corpus kind '" + kind + "'");
  }

  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const std::string& f = pieces[i];
    if (f == "connected") {
      spec.filters.connected_only = true;
    } else if (f == "bipartite") {
      spec.filters.bipartite_only = true;
    } else if (f.rfind("min-degree=", 0) == 0) {
      spec.filters.min_degree = static_cast<int>(parse_integer(f.substr(11), "min-degree"));
    } else {
      throw DomainError("unknown corpus filter '" + f + "'");
    }
  }
  return spec;
}

std::string CorpusSpec::to_string() const {
  std::string out;
  switch (kind) {
  case Kind::Exhaustive: out = "exhaustive:" + std::to_string(n); break;
  case Kind::ExhaustiveConnected: out = "exhaustive-connected:" + std::to_string(n); break;
  case Kind::RandomRegular:
    out = "random-regular:" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(count) + "," +
          std::to_string(seed);
    break;
  case Kind::Gnp: {
    std::ostringstream p_text;
    p_text.precision(17);
    p_text << p;
    out = "gnp:" + std::to_string(n) + "," + p_text.str() + "," + std::to_string(count) + "," + std::to_string(seed);
    break;
  }
  case Kind::Named:
    out = "named:";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    break;
  }
  if (filters.connected_only) out += "|connected";
  if (filters.bipartite_only) out += "|bipartite";
  if (filters.min_degree > 0) out += "|min-degree=" + std::to_string(filters.min_degree);
  return out;
}

CorpusStream::CorpusStream(CorpusSpec spec) : spec_(std::move(spec)), rng_(spec_.seed) {
  switch (spec_.kind) {
  case CorpusSpec::Kind::Exhaustive:
  case CorpusSpec::Kind::ExhaustiveConnected:
    require(spec_.n >= 0 && spec_.n <= kMaxExhaustiveOrder, "exhaustive corpora require n <= 6");
    limit_ = std::uint64_t{1} << (spec_.n * (spec_.n - 1) / 2);
    break;
  case CorpusSpec::Kind::RandomRegular:
  case CorpusSpec::Kind::Gnp: limit_ = static_cast<std::uint64_t>(spec_.count); break;
  case CorpusSpec::Kind::Named: limit_ = spec_.names.size(); break;
  }
}

std::optional<Graph> CorpusStream::raw_next() {
  if (cursor_ >= limit_) return std::nullopt;
  const std::uint64_t i = cursor_++;
  switch (spec_.kind) {
  case CorpusSpec::Kind::Exhaustive:
  case CorpusSpec::Kind::ExhaustiveConnected: return graph_from_code(spec_.n, i);
  case CorpusSpec::Kind::RandomRegular: return gen_random_regular(spec_.n, spec_.d, rng_);
  case CorpusSpec::Kind::Gnp: return gen_gnp(spec_.n, spec_.p, rng_);
  case CorpusSpec::Kind::Named: return gen_named(spec_.names[i]);
  }
  return std::nullopt;
}

bool CorpusStream::accepts(const Graph& g) const {
  const bool need_connected =
      spec_.filters.connected_only || spec_.kind == CorpusSpec::Kind::ExhaustiveConnected;
  if (need_connected && !g.is_connected()) return false;
  if (spec_.filters.bipartite_only && !bipartition_of(g)) return false;
  if (spec_.filters.min_degree > 0 && g.min_degree() < spec_.filters.min_degree) return false;
  return true;
}

std::optional<Graph> CorpusStream::next() {
  while (auto g = raw_next())
    if (accepts(*g)) return g;
  return std::nullopt;
}

CorpusStream gen_corpus(const CorpusSpec& spec) { return CorpusStream(spec); }

std::vector<Graph> collect_corpus(const CorpusSpec& spec) {
  std::vector<Graph> out;
  CorpusStream stream(spec);
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

} // namespace sepgraph
