#pragma once

#include "sepgraph/beta.hpp"
#include "sepgraph/caps.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

namespace sepgraph {

struct SubsetPair {
  VertexSet x;
  VertexSet y;
};

/// Exact minimal beta^2 of both modes: the maximum of
/// |X||Y| / ((n-|X|)(n-|Y|)) over nonempty proper X, Y with e(X,Y) = 0,
/// disjoint in weak mode, arbitrary overlap in strong mode. Complete graphs
/// are (n,0)-graphs by convention and report 0 in both modes with no
/// witness.
struct SeparationProfile {
  Rational beta_sq_weak;
  std::optional<SubsetPair> weak_witness;
  Rational beta_sq_strong;
  std::optional<SubsetPair> strong_witness;
};

/// Exact minimal beta^2 for (U, W, beta)-bipartiteness: maximum of
/// |X||Y| / ((|U|-|X|)(|W|-|Y|)) over nonempty X ⊊ U, Y ⊊ W with e(X,Y) = 0.
struct BipartiteProfile {
  Rational beta_sq;
  std::optional<SubsetPair> witness;
};

/// Enumerates X and pairs it with the largest feasible Y (the ratio grows
/// with |Y|): V∖(X∪N(X)) in weak mode, V∖N(X) in strong mode. Witness ties
/// go to the smallest X bitmask, then the smallest Y bitmask.
SeparationProfile separation_profile(const Graph& g, const Caps& caps = Caps::defaults());
BipartiteProfile bipartite_profile(const Graph& g, const Bipartition& bip, const Caps& caps = Caps::defaults());

struct MembershipResult {
  bool holds = true;
  std::optional<SubsetPair> counterexample;
};

/// beta^2 >= beta_sq_weak; exact for exact beta, with kBetaSlack toward
/// "holds" for approximate beta.
MembershipResult is_weak_beta_graph(const Graph& g, const BetaValue& beta, const Caps& caps = Caps::defaults());
MembershipResult is_strong_beta_graph(const Graph& g, const BetaValue& beta, const Caps& caps = Caps::defaults());
MembershipResult is_bipartite_beta_graph(const Graph& g, const Bipartition& bip, const BetaValue& beta,
                                         const Caps& caps = Caps::defaults());
/// Same decision against an already computed maximum.
MembershipResult check_membership(const Rational& beta_sq_max, const std::optional<SubsetPair>& witness,
                                  const BetaValue& beta);

/// One assertion with its slack: margin >= 0 (or > 0 for strict checks)
/// means satisfied. `skipped` marks assertions that do not apply.
struct Assertion {
  bool holds = true;
  bool skipped = false;
  bool strict = false;
  double margin = 0;
  std::string expression;
};

struct Lemma22Result {
  int x_size = 0;
  int y_size = 0;
  Assertion x_bound; ///< |X| <= beta n / (1 + beta)
  Assertion s_bound; ///< |S| >= ((1 - beta)/beta) |X|, skipped when beta >= 1
};

/// Checks the separator lemma for S with V∖S split into X (the union of the
/// floor(c/2) smallest components) and Y (the rest).
Lemma22Result lemma22_check(const Graph& g, const VertexSet& s, const BetaValue& beta);
/// Same with a caller-supplied split. Requires G - S disconnected, X and Y
/// nonempty, disjoint, covering V∖S, e(X,Y) = 0, |X| <= |Y| and
/// |X||Y| <= beta^2 (n-|X|)(n-|Y|); violations are a DomainError.
Lemma22Result lemma22_check(const Graph& g, const VertexSet& s, const VertexSet& x, const VertexSet& y,
                            const BetaValue& beta);

/// Canonical split of V∖S: X is the union of the floor(c/2) smallest
/// components (ties by smallest vertex), Y the rest.
SubsetPair canonical_component_split(const Graph& g, const VertexSet& s);

struct Lemma23Result {
  int components = 0;
  Assertion first;  ///< weak: |S| > (c-1)(1-beta)/(2 beta); strong: c <= beta n/(1+beta)
  Assertion second; ///< weak: c - |S| < max{((3beta-1)n + 2(1-beta))/(beta+1), 0}; strong: c-|S| <= max{(2beta-1)n/(1+beta), 0}
};

/// Requires c(G - S) >= 2, and 0 < beta < 1 in weak mode (DomainError
/// otherwise). `mode` must be Weak or Strong.
Lemma23Result lemma23_bounds(const Graph& g, const VertexSet& s, const BetaValue& beta, bool weak_mode);

namespace detail {

struct RawMax {
  std::uint64_t num = 0; ///< |X||Y|
  std::uint64_t den = 1; ///< (n-|X|)(n-|Y|)
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

/// Maxima without the complete-graph convention, via the maximal-Y
/// reduction. Exposed for the full-enumeration cross-check.
RawMax raw_weak_max(std::span<const std::uint64_t> rows, int n);
RawMax raw_strong_max(std::span<const std::uint64_t> rows, int n);
RawMax raw_bipartite_max(std::span<const std::uint64_t> rows, std::uint64_t left, std::uint64_t right);

} // namespace detail

} // namespace sepgraph

namespace sepgraph {

/// Separator-lemma assertions with every threshold resolved to an integer
/// once per graph, for sweeps over all separators. Decisions are exact; the
/// reported margins are doubles. Requires exact betas.
class SeparatorChecker {
public:
  SeparatorChecker(int n, const BetaValue& weak, const BetaValue& strong);

  /// |X| <= beta n/(1+beta) and |S| >= ((1-beta)/beta)|X| under weak beta.
  Assertion lemma22_x(int x_size) const;
  Assertion lemma22_s(int s_size, int x_size) const;
  /// Weak mode; skipped unless 0 < beta_weak < 1.
  Assertion lemma23_weak_s(int s_size, int c) const;
  Assertion lemma23_weak_scatter(int s_size, int c) const;
  Assertion lemma23_strong_c(int c) const;
  Assertion lemma23_strong_scatter(int s_size, int c) const;
  /// If G-S has c-1 isolated vertices and |V-S| >= 2 beta n/(1+beta) then
  /// |S| > 2(c-1)/(beta(1+beta)); skipped when the premise fails. S must be
  /// nonempty so that Y = V-S is a proper subset.
  Assertion lemma23_strong_isolated(int s_size, int c, int isolated) const;

private:
  int n_;
  bool weak_open_; ///< 0 < beta_weak < 1
  double bw_, bs_;
  long long x_cap_;
  std::vector<long long> s_floor_; ///< min |S| for lemma22 per |X|; empty when beta_weak >= 1
  std::vector<long long> l23_s_;   ///< min |S| per c, weak
  long long l23_scatter_weak_;     ///< max c-|S|, weak
  long long l23_c_;                ///< max c, strong
  long long l23_scatter_strong_;   ///< max c-|S|, strong
  long long iso_rest_;             ///< min |V-S| for the isolated clause
  std::vector<long long> iso_s_;   ///< min |S| per c for the isolated clause
};

} // namespace sepgraph
