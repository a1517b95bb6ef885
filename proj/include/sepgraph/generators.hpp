#pragma once

#include "sepgraph/graph.hpp"
#include "sepgraph/rng.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sepgraph {

// Named families. Invalid parameters raise DomainError.
Graph complete_graph(int n);
Graph cycle_graph(int n); ///< n >= 3
Graph path_graph(int n);
/// Left side 0..a-1, right side a..a+b-1.
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int leaves); ///< complete_bipartite(1, leaves)
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();
Graph hypercube_graph(int dimension);
/// Paley graph on Z_q for prime q = 1 (mod 4): i ~ j iff i - j is a nonzero
/// quadratic residue. Prime powers are rejected.
Graph paley_graph(int q);

/// Family lookup by name: complete, cycle, path, complete_bipartite (or
/// complete-bipartite), star, petersen, hypercube, paley.
Graph gen_named(std::string_view family, const std::vector<int>& params);
/// Parses "paley(13)", "petersen", "complete_bipartite(2,3)".
Graph gen_named(std::string_view expression);

/// Configuration-model d-regular graph: perfect matchings of the n*d
/// half-edges are sampled until one is simple. Infeasible parameters are a
/// DomainError; exceeding `max_attempts` is a RetryableError.
Graph gen_random_regular(int n, int d, Xoshiro256& rng, int max_attempts = 100000);
Graph gen_random_regular(int n, int d, std::uint64_t seed);

/// G(n, p): each pair independently, in graph6 bit order.
Graph gen_gnp(int n, double p, Xoshiro256& rng);

/// Labeled graph whose edge set is the bit pattern `code` over pairs in
/// graph6 order ((0,1), (0,2), (1,2), (0,3), ...).
Graph graph_from_code(int n, std::uint64_t code);

struct CorpusFilters {
  bool connected_only = false;
  bool bipartite_only = false;
  int min_degree = 0;
};

/// Deterministic description of a graph corpus. String form:
///   exhaustive:N             all 2^(N(N-1)/2) labeled graphs, N <= 6
///   exhaustive-connected:N   the connected ones
///   random-regular:N,D,COUNT[,SEED]
///   gnp:N,P,COUNT[,SEED]
///   named:FAMILY[,FAMILY...] e.g. named:petersen,paley(13),cycle(5)
/// optionally followed by filters "|connected", "|bipartite",
/// "|min-degree=K". A seed in the string overrides the default seed.
struct CorpusSpec {
  enum class Kind { Exhaustive, ExhaustiveConnected, RandomRegular, Gnp, Named };
  Kind kind = Kind::Named;
  int n = 0;
  int d = 0;
  double p = 0.0;
  int count = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> names;
  CorpusFilters filters;

  static CorpusSpec parse(std::string_view text, std::uint64_t default_seed = 0);
  std::string to_string() const;
};

inline constexpr int kMaxExhaustiveOrder = 6;

/// Pull-based corpus iterator; yields graphs in a fixed order.
class CorpusStream {
public:
  explicit CorpusStream(CorpusSpec spec);
  std::optional<Graph> next();
  const CorpusSpec& spec() const { return spec_; }

private:
  std::optional<Graph> raw_next();
  bool accepts(const Graph& g) const;

  CorpusSpec spec_;
  Xoshiro256 rng_;
  std::uint64_t cursor_ = 0;
  std::uint64_t limit_ = 0;
};

CorpusStream gen_corpus(const CorpusSpec& spec);
std::vector<Graph> collect_corpus(const CorpusSpec& spec);

} // namespace sepgraph
