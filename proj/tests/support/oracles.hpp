#pragma once

// Independent reference implementations used only by tests. None of these
// call into the library's algorithms beyond the Graph container itself.

#include "sepgraph/graph.hpp"
#include "sepgraph/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

using sepgraph::Graph;
using sepgraph::Rational;

inline std::vector<std::vector<int>> matrix_of(const Graph& g) {
  std::vector<std::vector<int>> a(g.order(), std::vector<int>(g.order(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

/// Straight transcription of the graph6 format: N(n), then upper-triangle
/// bits x(0,1) x(0,2) x(1,2) x(0,3) ... padded to a multiple of six.
inline std::string graph6_encode(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  std::vector<int> bitstring;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bitstring.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bitstring.size() % 6) bitstring.push_back(0);
  for (std::size_t k = 0; k < bitstring.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bitstring[k + b];
    out += static_cast<char>(63 + value);
  }
  return out;
}

struct Components {
  int count = 0;
  int odd = 0;
  int isolated = 0;
};

/// Recursive DFS over the vertices not in `removed`.
inline Components components(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  Components out;
  std::function<int(int, int)> dfs = [&](int v, int id) {
    label[v] = id;
    int size = 1;
    for (int w = 0; w < n; ++w)
      if (!removed[w] && label[w] == -1 && g.adjacent(v, w)) size += dfs(w, id);
    return size;
  };
  for (int v = 0; v < n; ++v) {
    if (removed[v] || label[v] != -1) continue;
    const int size = dfs(v, out.count++);
    if (size % 2) ++out.odd;
    if (size == 1) ++out.isolated;
  }
  return out;
}

inline std::vector<bool> members_of(std::uint64_t mask, int n) {
  std::vector<bool> in(n);
  for (int v = 0; v < n; ++v) in[v] = (mask >> v) & 1U;
  return in;
}

inline int popcount(std::uint64_t m) {
  int c = 0;
  for (; m; m &= m - 1) ++c;
  return c;
}

inline long long edges_between(const Graph& g, std::uint64_t x, std::uint64_t y) {
  long long e = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (((x >> u) & 1U) && ((y >> v) & 1U) && g.adjacent(u, v)) ++e;
  return e;
}

enum class Mode { Weak, Strong };

/// Maximum of |X||Y|/((n-|X|)(n-|Y|)) over every pair of nonempty proper
/// subsets with e(X,Y) = 0 (disjoint in weak mode). Literal definition, no
/// complete-graph convention.
inline Rational pair_max(const Graph& g, Mode mode) {
  const int n = g.order();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  Rational best(0);
  for (std::uint64_t x = 1; x < full; ++x)
    for (std::uint64_t y = 1; y < full; ++y) {
      if (mode == Mode::Weak && (x & y)) continue;
      if (edges_between(g, x, y) != 0) continue;
      const int a = popcount(x), b = popcount(y);
      const Rational r(static_cast<long long>(a) * b, static_cast<long long>(n - a) * (n - b));
      if (best < r) best = r;
    }
  return best;
}

/// Same for X ⊊ U, Y ⊊ W.
inline Rational bipartite_pair_max(const Graph& g, std::uint64_t u, std::uint64_t w) {
  Rational best(0);
  const int nu = popcount(u), nw = popcount(w);
  for (std::uint64_t x = 1; x <= u; ++x) {
    if ((x & ~u) || x == u) continue;
    for (std::uint64_t y = 1; y <= w; ++y) {
      if ((y & ~w) || y == w) continue;
      if (edges_between(g, x, y) != 0) continue;
      const int a = popcount(x), b = popcount(y);
      const Rational r(static_cast<long long>(a) * b, static_cast<long long>(nu - a) * (nw - b));
      if (best < r) best = r;
    }
  }
  return best;
}

/// Matching number by exhaustive search over edge choices.
inline int matching_number(const Graph& g) {
  const auto edges = g.edges();
  std::vector<bool> used(g.order(), false);
  std::function<int(std::size_t)> go = [&](std::size_t i) -> int {
    if (i == edges.size()) return 0;
    int best = go(i + 1);
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      best = std::max(best, 1 + go(i + 1));
      used[u] = used[v] = false;
    }
    return best;
  };
  return go(0);
}

/// (n + min_S {|S| - odd(G-S)}) / 2.
inline int berge_tutte(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    best = std::min(best, popcount(s) - components(g, members_of(s, n)).odd);
  return (n + best) / 2;
}

/// (n + min_S {|S| - i(G-S)}) / 2, i counting isolated vertices.
inline Rational fractional_berge_tutte(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    best = std::min(best, popcount(s) - components(g, members_of(s, n)).isolated);
  return Rational(n + best, 2);
}

struct Toughness {
  bool infinite = true;
  Rational t;
  Rational t_prime;
  int scattering = 0;
};

/// t, t' and s straight from the definitions, components by DFS.
inline Toughness toughness(const Graph& g) {
  const int n = g.order();
  Toughness out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 0; s < full; ++s) {
    const int c = components(g, members_of(s, n)).count;
    if (c < 2) continue;
    const int k = popcount(s);
    const Rational t(k, c), tp(k, c - 1);
    if (out.infinite) {
      out.infinite = false;
      out.t = t;
      out.t_prime = tp;
      out.scattering = c - k;
    } else {
      if (t < out.t) out.t = t;
      if (tp < out.t_prime) out.t_prime = tp;
      out.scattering = std::max(out.scattering, c - k);
    }
  }
  return out;
}

} // namespace oracle
