#include "sepgraph/separation.hpp"

#include "sepgraph/bounds.hpp"
#include "sepgraph/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace sepgraph {

namespace detail {

namespace {

void offer(RawMax& best, std::uint64_t x, std::uint64_t y, std::uint64_t num, std::uint64_t den) {
  // Strictly greater only: ascending X keeps the smallest witness on ties.
  if (!best.witness || num * best.den > best.num * den) {
    best.num = num;
    best.den = den;
    best.witness = std::make_pair(x, y);
  }
}

std::uint64_t without_highest(std::uint64_t m) { return m & ~(std::uint64_t{1} << (63 - std::countl_zero(m))); }

} // namespace

RawMax raw_weak_max(std::span<const std::uint64_t> rows, int n) {
  RawMax best;
  const std::uint64_t full = bits::full_mask(n);
  for (std::uint64_t x = 1; x < full; ++x) {
    const std::uint64_t y = full & ~(x | masks::neighborhood(rows, x));
    if (!y) continue;
    const std::uint64_t sx = bits::popcount(x);
    const std::uint64_t sy = bits::popcount(y);
    offer(best, x, y, sx * sy, (n - sx) * (n - sy));
  }
  return best;
}

RawMax raw_strong_max(std::span<const std::uint64_t> rows, int n) {
  RawMax best;
  const std::uint64_t full = bits::full_mask(n);
  for (std::uint64_t x = 1; x < full; ++x) {
    std::uint64_t y = full & ~masks::neighborhood(rows, x);
    if (y == full) y = without_highest(full);
    if (!y) continue;
    const std::uint64_t sx = bits::popcount(x);
    const std::uint64_t sy = bits::popcount(y);
    offer(best, x, y, sx * sy, (n - sx) * (n - sy));
  }
  return best;
}

RawMax raw_bipartite_max(std::span<const std::uint64_t> rows, std::uint64_t left, std::uint64_t right) {
  RawMax best;
  const std::uint64_t nu = bits::popcount(left);
  const std::uint64_t nw = bits::popcount(right);
  if (!left) return best;
  std::uint64_t x = 0;
  while ((x = (x - left) & left) != 0) {
    if (x == left) continue;
    std::uint64_t y = right & ~masks::neighborhood(rows, x);
    if (y == right && y) y = without_highest(right);
    if (!y) continue;
    const std::uint64_t sx = bits::popcount(x);
    const std::uint64_t sy = bits::popcount(y);
    offer(best, x, y, sx * sy, (nu - sx) * (nw - sy));
  }
  return best;
}

} // namespace detail

namespace {

Rational ratio_of(const detail::RawMax& m) {
  return m.witness ? Rational(static_cast<long long>(m.num), static_cast<long long>(m.den)) : Rational(0);
}

std::optional<SubsetPair> pair_of(const detail::RawMax& m, int n) {
  if (!m.witness) return std::nullopt;
  return SubsetPair{VertexSet::from_mask(n, m.witness->first), VertexSet::from_mask(n, m.witness->second)};
}

Assertion judge_exact(const Surd& slack, bool strict, std::string expression) {
  Assertion a;
  a.strict = strict;
  a.margin = slack.to_double();
  a.holds = strict ? slack.sign() > 0 : slack.sign() >= 0;
  a.expression = std::move(expression);
  return a;
}

Assertion judge_approx(double slack, bool strict, std::string expression) {
  Assertion a;
  a.strict = strict;
  a.margin = slack;
  a.holds = strict ? slack > -kBetaSlack : slack >= -kBetaSlack;
  a.expression = std::move(expression);
  return a;
}

template <class T>
Assertion judge(const T& slack, bool strict, std::string expression) {
  if constexpr (std::is_same_v<T, double>)
    return judge_approx(slack, strict, std::move(expression));
  else
    return judge_exact(slack, strict, std::move(expression));
}

template <class T>
T beta_as(const BetaValue& beta) {
  if constexpr (std::is_same_v<T, double>)
    return beta.to_double();
  else
    return beta.surd();
}

template <class T>
Lemma22Result lemma22_impl(int n, int s_size, int x_size, int y_size, const BetaValue& beta_value) {
  using namespace bounds;
  const T beta = beta_as<T>(beta_value);
  Lemma22Result r;
  r.x_size = x_size;
  r.y_size = y_size;
  r.x_bound = judge<T>(separated_side_cap(beta, n) - lift<T>(x_size), false, "|X| <= beta*n/(1+beta)");
  if (!(beta < lift<T>(1))) {
    r.s_bound.skipped = true;
    r.s_bound.expression = "|S| >= ((1-beta)/beta)*|X| (trivial for beta >= 1)";
  } else {
    r.s_bound = judge<T>(lift<T>(s_size) - separator_size_floor(beta, x_size), false, "|S| >= ((1-beta)/beta)*|X|");
  }
  return r;
}

template <class T>
Lemma23Result lemma23_impl(int n, int s_size, int c, const BetaValue& beta_value, bool weak_mode) {
  using namespace bounds;
  const T beta = beta_as<T>(beta_value);
  Lemma23Result r;
  r.components = c;
  if (weak_mode) {
    r.first = judge<T>(lift<T>(s_size) - weak_separator_floor(beta, c), true, "|S| > (c-1)(1-beta)/(2*beta)");
    r.second = judge<T>(weak_scattering(beta, n) - lift<T>(c - s_size), true,
                        "c-|S| < max{((3*beta-1)n+2(1-beta))/(beta+1), 0}");
  } else {
    r.first = judge<T>(separated_side_cap(beta, n) - lift<T>(c), false, "c <= beta*n/(1+beta)");
    r.second = judge<T>(strong_scattering(beta, n) - lift<T>(c - s_size), false,
                        "c-|S| <= max{(2*beta-1)n/(1+beta), 0}");
  }
  return r;
}

bool ratio_within(const BetaValue& beta, long long num, long long den) {
  if (beta.is_exact()) return Rational(num) <= beta.square() * Rational(den);
  return std::sqrt(static_cast<double>(num) / static_cast<double>(den)) <= beta.to_double() + kBetaSlack;
}

} // namespace

SeparationProfile separation_profile(const Graph& g, const Caps& caps) {
  const int n = g.order();
  enforce_cap(n, caps.exponential, "separation_profile");
  SeparationProfile p;
  if (g.is_complete()) return p; // (n,0)-graph convention
  const auto rows = g.row_masks();
  const auto weak = detail::raw_weak_max(rows, n);
  const auto strong = detail::raw_strong_max(rows, n);
  p.beta_sq_weak = ratio_of(weak);
  p.weak_witness = pair_of(weak, n);
  p.beta_sq_strong = ratio_of(strong);
  p.strong_witness = pair_of(strong, n);
  return p;
}

BipartiteProfile bipartite_profile(const Graph& g, const Bipartition& bip, const Caps& caps) {
  const int n = g.order();
  enforce_cap(n, caps.exponential, "bipartite_profile");
  if (bip.left.empty() || bip.right.empty()) throw DomainError("bipartite_profile requires both sides nonempty");
  for (auto [u, v] : g.edges())
    if (bip.left.contains(u) == bip.left.contains(v)) throw DomainError("edge inside a side of the bipartition");
  const auto m = detail::raw_bipartite_max(g.row_masks(), bip.left.mask(), bip.right.mask());
  return {ratio_of(m), pair_of(m, n)};
}

MembershipResult check_membership(const Rational& beta_sq_max, const std::optional<SubsetPair>& witness,
                                  const BetaValue& beta) {
  bool holds = beta.is_exact() ? beta.square() >= beta_sq_max
                               : beta.to_double() + kBetaSlack >= std::sqrt(beta_sq_max.to_double());
  MembershipResult r;
  r.holds = holds;
  if (!holds) r.counterexample = witness;
  return r;
}

MembershipResult is_weak_beta_graph(const Graph& g, const BetaValue& beta, const Caps& caps) {
  const auto p = separation_profile(g, caps);
  return check_membership(p.beta_sq_weak, p.weak_witness, beta);
}

MembershipResult is_strong_beta_graph(const Graph& g, const BetaValue& beta, const Caps& caps) {
  const auto p = separation_profile(g, caps);
  return check_membership(p.beta_sq_strong, p.strong_witness, beta);
}

MembershipResult is_bipartite_beta_graph(const Graph& g, const Bipartition& bip, const BetaValue& beta,
                                         const Caps& caps) {
  const auto p = bipartite_profile(g, bip, caps);
  return check_membership(p.beta_sq, p.witness, beta);
}

SubsetPair canonical_component_split(const Graph& g, const VertexSet& s) {
  auto split = components_after_removal(g, s);
  auto comps = split.components; // already ordered by smallest member
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  SubsetPair out{VertexSet(g.order()), VertexSet(g.order())};
  const std::size_t half = comps.size() / 2;
  for (std::size_t i = 0; i < comps.size(); ++i) (i < half ? out.x : out.y) |= comps[i];
  return out;
}

Lemma22Result lemma22_check(const Graph& g, const VertexSet& s, const VertexSet& x, const VertexSet& y,
                            const BetaValue& beta) {
  const int n = g.order();
  const auto split = components_after_removal(g, s);
  if (split.count < 2) throw DomainError("lemma22_check requires G - S disconnected");
  if (x.empty() || y.empty()) throw DomainError("lemma22_check requires nonempty X and Y");
  if (x.intersects(y) || x.intersects(s) || y.intersects(s) || (x | y | s) != VertexSet::full(n))
    throw DomainError("X and Y must partition V - S");
  if (edges_between(g, x, y) != 0) throw DomainError("X and Y must be unions of components (e(X,Y) = 0)");
  if (x.size() > y.size()) throw DomainError("lemma22_check requires |X| <= |Y|");
  const long long num = static_cast<long long>(x.size()) * y.size();
  const long long den = static_cast<long long>(n - x.size()) * (n - y.size());
  if (!ratio_within(beta, num, den)) throw DomainError("|X||Y| exceeds beta^2 (n-|X|)(n-|Y|)");
  return beta.is_exact() ? lemma22_impl<Surd>(n, s.size(), x.size(), y.size(), beta)
                         : lemma22_impl<double>(n, s.size(), x.size(), y.size(), beta);
}

Lemma22Result lemma22_check(const Graph& g, const VertexSet& s, const BetaValue& beta) {
  const auto split = canonical_component_split(g, s);
  return lemma22_check(g, s, split.x, split.y, beta);
}

Lemma23Result lemma23_bounds(const Graph& g, const VertexSet& s, const BetaValue& beta, bool weak_mode) {
  const int c = components_after_removal(g, s).count;
  if (c < 2) throw DomainError("lemma23_bounds requires c(G - S) >= 2");
  if (weak_mode) {
    const bool in_range = beta.is_exact() ? beta.square().sign() > 0 && beta.square() < Rational(1)
                                          : beta.to_double() > 0.0 && beta.to_double() < 1.0;
    if (!in_range) throw DomainError("weak-mode lemma23_bounds requires 0 < beta < 1");
  }
  return beta.is_exact() ? lemma23_impl<Surd>(g.order(), s.size(), c, beta, weak_mode)
                         : lemma23_impl<double>(g.order(), s.size(), c, beta, weak_mode);
}

} // namespace sepgraph

namespace sepgraph {

namespace {

long long to_ll(const BigInt& b) { return static_cast<long long>(b); }

Assertion integer_assertion(bool holds, double margin, bool strict, const char* expression) {
  Assertion a;
  a.holds = holds;
  a.margin = margin;
  a.strict = strict;
  a.expression = expression;
  return a;
}

Assertion skipped_assertion(const char* expression) {
  Assertion a;
  a.skipped = true;
  a.expression = expression;
  return a;
}

} // namespace

SeparatorChecker::SeparatorChecker(int n, const BetaValue& weak, const BetaValue& strong) : n_(n) {
  using namespace bounds;
  const Surd w = weak.surd();
  const Surd s = strong.surd();
  bw_ = w.to_double();
  bs_ = s.to_double();
  const Surd one(1);
  weak_open_ = w.sign() > 0 && w < one;
  x_cap_ = w.sign() > 0 ? to_ll(separated_side_cap(w, n).floor()) : 0;
  if (w.sign() > 0 && w < one)
    for (int x = 0; x <= n; ++x) s_floor_.push_back(to_ll(separator_size_floor(w, x).ceil()));
  if (weak_open_) {
    for (int c = 0; c <= n; ++c) l23_s_.push_back(to_ll(weak_separator_floor(w, c).floor()) + 1);
    l23_scatter_weak_ = to_ll(weak_scattering(w, n).ceil()) - 1;
  } else {
    l23_scatter_weak_ = 0;
  }
  l23_c_ = to_ll(separated_side_cap(s, n).floor());
  l23_scatter_strong_ = to_ll(strong_scattering(s, n).floor());
  if (s.sign() > 0) {
    iso_rest_ = to_ll((Surd(2) * separated_side_cap(s, n)).ceil());
    const Surd denom = s * (one + s);
    for (int c = 0; c <= n; ++c) iso_s_.push_back(to_ll((Surd(2 * (c - 1)) / denom).floor()) + 1);
  } else {
    iso_rest_ = n + 1;
  }
}

Assertion SeparatorChecker::lemma22_x(int x_size) const {
  return integer_assertion(x_size <= x_cap_, bw_ * n_ / (1 + bw_) - x_size, false, "|X| <= beta*n/(1+beta)");
}

Assertion SeparatorChecker::lemma22_s(int s_size, int x_size) const {
  if (s_floor_.empty()) return skipped_assertion("|S| >= ((1-beta)/beta)*|X| (trivial for beta >= 1)");
  return integer_assertion(s_size >= s_floor_[x_size], s_size - (1 - bw_) / bw_ * x_size, false,
                           "|S| >= ((1-beta)/beta)*|X|");
}

Assertion SeparatorChecker::lemma23_weak_s(int s_size, int c) const {
  if (!weak_open_) return skipped_assertion("|S| > (c-1)(1-beta)/(2*beta) (needs 0 < beta < 1)");
  return integer_assertion(s_size >= l23_s_[c], s_size - (c - 1) * (1 - bw_) / (2 * bw_), true,
                           "|S| > (c-1)(1-beta)/(2*beta)");
}

Assertion SeparatorChecker::lemma23_weak_scatter(int s_size, int c) const {
  if (!weak_open_) return skipped_assertion("c-|S| < max{((3*beta-1)n+2(1-beta))/(beta+1), 0} (needs 0 < beta < 1)");
  const double cap = std::max(((3 * bw_ - 1) * n_ + 2 * (1 - bw_)) / (bw_ + 1), 0.0);
  return integer_assertion(c - s_size <= l23_scatter_weak_, cap - (c - s_size), true,
                           "c-|S| < max{((3*beta-1)n+2(1-beta))/(beta+1), 0}");
}

Assertion SeparatorChecker::lemma23_strong_c(int c) const {
  return integer_assertion(c <= l23_c_, bs_ * n_ / (1 + bs_) - c, false, "c <= beta*n/(1+beta)");
}

Assertion SeparatorChecker::lemma23_strong_scatter(int s_size, int c) const {
  const double cap = std::max((2 * bs_ - 1) * n_ / (1 + bs_), 0.0);
  return integer_assertion(c - s_size <= l23_scatter_strong_, cap - (c - s_size), false,
                           "c-|S| <= max{(2*beta-1)n/(1+beta), 0}");
}

Assertion SeparatorChecker::lemma23_strong_isolated(int s_size, int c, int isolated) const {
  const char* expression = "|S| > 2(c-1)/(beta(1+beta)) when c-1 components are isolated vertices";
  if (iso_s_.empty() || s_size == 0 || isolated < c - 1 || n_ - s_size < iso_rest_) return skipped_assertion(expression);
  return integer_assertion(s_size >= iso_s_[c], s_size - 2.0 * (c - 1) / (bs_ * (1 + bs_)), true, expression);
}

} // namespace sepgraph
