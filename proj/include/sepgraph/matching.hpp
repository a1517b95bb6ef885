#pragma once

#include "sepgraph/caps.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/rational.hpp"

#include <vector>

namespace sepgraph {

struct MaxMatching {
  int alpha_prime = 0;
  std::vector<Edge> matching; ///< sorted, (min endpoint, max endpoint)
};

/// Edmonds' blossom algorithm. The witness is the lexicographically
/// smallest maximum matching.
MaxMatching max_matching(const Graph& g);

/// Matching number of G restricted to the vertices with alive[v] set.
int matching_number(const Graph& g, const std::vector<char>& alive);

struct Deficiency {
  int value = 0; ///< min over S of |S| - o(G-S); always <= 0
  VertexSet set;
};

/// 2^n enumeration; the smallest minimizing S as a bitmask.
Deficiency berge_tutte_oracle(const Graph& g, const Caps& caps = Caps::defaults());
/// min over S of |S| - i(G-S), by enumeration.
Deficiency fractional_deficiency_oracle(const Graph& g, const Caps& caps = Caps::defaults());

bool is_factor_critical(const Graph& g);
/// n odd and o(G-S) <= |S| for every nonempty S.
bool gallai_factor_critical_oracle(const Graph& g, const Caps& caps = Caps::defaults());

struct FractionalMatching {
  Rational alpha_prime_frac;
  VertexSet deficiency_set; ///< attains |S| - i(G-S) = 2 alpha'_f - n
};

/// Half the matching number of the bipartite double cover; the deficiency
/// set comes from a minimum vertex cover of the cover graph.
FractionalMatching fractional_matching(const Graph& g);
Rational fractional_matching_number(const Graph& g);

/// Augmenting-path matching from the left side.
int bipartite_matching(const Graph& g, const Bipartition& bip);
/// |U| + min over S ⊆ U of (|N(S)| - |S|).
int ore_oracle(const Graph& g, const Bipartition& bip, const Caps& caps = Caps::defaults());

struct MatchingReport {
  int alpha_prime = 0;
  std::vector<Edge> matching;
  VertexSet deficiency_set; ///< Gallai-Edmonds barrier A(G)
  int deficiency = 0;       ///< |S| - o(G-S) for deficiency_set
  bool has_perfect = false;
  bool is_factor_critical = false;
  Rational alpha_prime_frac;
  VertexSet frac_deficiency_set;
  int frac_deficiency = 0; ///< |S| - i(G-S) for frac_deficiency_set
  bool has_frac_perfect = false;
};

MatchingReport matching_report(const Graph& g);

} // namespace sepgraph
