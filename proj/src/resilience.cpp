#include "sepgraph/resilience.hpp"

#include "sepgraph/error.hpp"

namespace sepgraph {

ToughnessReport toughness_report(const Graph& g, const Caps& caps) {
  const int n = g.order();
  enforce_cap(n, caps.toughness, "toughness");
  if (n > 0 && !g.is_connected()) throw DomainError("toughness requires a connected graph");
  ToughnessReport r;
  r.toughness_witness = r.t_prime_witness = r.scattering.witness = VertexSet(n);
  if (g.is_complete()) return r;

  const auto rows = g.row_masks();
  const std::uint64_t full = bits::full_mask(n);
  // Best ratios kept as (numerator, denominator) pairs.
  long long t_num = 1, t_den = 0, tp_num = 1, tp_den = 0;
  std::uint64_t t_arg = 0, tp_arg = 0, s_arg = 0;
  int s_best = 0;
  bool found = false;
  for (std::uint64_t s = 1; s < full; ++s) {
    const int c = masks::component_counts(rows, full & ~s).count;
    if (c < 2) continue;
    const int size = bits::popcount(s);
    if (t_den == 0 || size * t_den < t_num * c) {
      t_num = size;
      t_den = c;
      t_arg = s;
    }
    if (tp_den == 0 || size * tp_den < tp_num * (c - 1)) {
      tp_num = size;
      tp_den = c - 1;
      tp_arg = s;
    }
    if (!found || c - size > s_best) {
      s_best = c - size;
      s_arg = s;
    }
    found = true;
  }
  r.toughness = Rational(t_num, t_den);
  r.toughness_witness = VertexSet::from_mask(n, t_arg);
  r.t_prime = Rational(tp_num, tp_den);
  r.t_prime_witness = VertexSet::from_mask(n, tp_arg);
  r.scattering.value = s_best;
  r.scattering.witness = VertexSet::from_mask(n, s_arg);
  return r;
}

ExtRational toughness(const Graph& g, const Caps& caps) { return toughness_report(g, caps).toughness; }

ExtRational enomoto_t_prime(const Graph& g, const Caps& caps) { return toughness_report(g, caps).t_prime; }

Scattering scattering_number(const Graph& g, const Caps& caps) { return toughness_report(g, caps).scattering; }

} // namespace sepgraph
