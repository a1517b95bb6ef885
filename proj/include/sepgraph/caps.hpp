#pragma once

namespace sepgraph {

/// Largest order any subset-enumeration routine accepts (vertex sets are
/// 64-bit masks there).
inline constexpr int kMaskLimit = 64;

/// Size caps for exponential-time routines. Defaults can be overridden with
/// the SSL_MAX_N environment variable, which replaces both caps.
struct Caps {
  int exponential = 64; ///< separation profiles, Berge-Tutte/Gallai oracles
  int toughness = 22;   ///< separator enumeration for t, t', s

  static Caps defaults();
};

/// Throws ResourceError when n exceeds `cap` (or the mask limit).
void enforce_cap(int n, int cap, const char* what);

} // namespace sepgraph
