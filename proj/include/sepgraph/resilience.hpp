#pragma once

#include "sepgraph/caps.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/rational.hpp"

#include <optional>
#include <string>

namespace sepgraph {

/// Scattering number; empty for complete graphs, where no S disconnects G
/// (reported as "undefined").
struct Scattering {
  std::optional<int> value;
  VertexSet witness;
  std::string to_string() const { return value ? std::to_string(*value) : "undefined"; }
};

/// t(G), Enomoto's t'(G) and s(G) over all disconnecting S, with the
/// smallest attaining S (as a bitmask) for each. Complete graphs give
/// t = t' = inf and an undefined scattering number.
struct ToughnessReport {
  ExtRational toughness = ExtRational::infinity();
  VertexSet toughness_witness;
  ExtRational t_prime = ExtRational::infinity();
  VertexSet t_prime_witness;
  Scattering scattering;
};

/// Requires g connected (DomainError) and n within caps.toughness
/// (ResourceError).
ToughnessReport toughness_report(const Graph& g, const Caps& caps = Caps::defaults());
ExtRational toughness(const Graph& g, const Caps& caps = Caps::defaults());
ExtRational enomoto_t_prime(const Graph& g, const Caps& caps = Caps::defaults());
Scattering scattering_number(const Graph& g, const Caps& caps = Caps::defaults());

} // namespace sepgraph
