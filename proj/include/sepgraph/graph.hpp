#pragma once

#include "sepgraph/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sepgraph {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, stored as one
/// adjacency bitrow per vertex.
class Graph {
public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws DomainError on loops or out-of-range endpoints; duplicate edges
  /// are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  int degree(int v) const { return degrees_[v]; }
  int min_degree() const;
  int max_degree() const;
  VertexSet neighbors(int v) const;
  /// Adjacency row as a mask; requires order() <= 64.
  std::uint64_t row_mask(int v) const { return rows_[static_cast<std::size_t>(v) * words_]; }
  /// All rows as masks; requires order() <= 64.
  std::vector<std::uint64_t> row_masks() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_complete() const { return 2 * static_cast<long long>(m_) == static_cast<long long>(n_) * (n_ - 1); }
  bool is_regular() const;
  bool is_connected() const;
  bool has_isolated_vertex() const;

  /// Induced subgraph with vertices relabeled in ascending order.
  Graph induced(const VertexSet& keep) const;
  Graph without_vertex(int v) const;
  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  void set_edge(int u, int v);
  void finalize();

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degrees_;
};

/// Two-coloring of a bipartite graph; `left` is named U and `right` W.
struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// e(X, Y): edges with one end in X and the other in Y; an edge with both
/// ends in X ∩ Y contributes 2.
long long edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

/// N(X): vertices with at least one neighbor in X (may intersect X).
VertexSet neighborhood(const Graph& g, const VertexSet& x);

/// Sum of degrees over X.
long long volume(const Graph& g, const VertexSet& x);

struct ComponentSplit {
  std::vector<VertexSet> components; ///< ordered by smallest member
  int count = 0;                     ///< c(G - S)
  int odd = 0;                       ///< o(G - S)
  int isolated = 0;                  ///< i(G - S)
};

/// Connected components of G - S.
ComponentSplit components_after_removal(const Graph& g, const VertexSet& s);

/// Deterministic BFS 2-coloring: each component is explored from its
/// lowest-index vertex, which is put on the left side. Empty when G has an
/// odd cycle.
std::optional<Bipartition> bipartition_of(const Graph& g);

namespace masks {

/// Fast component accounting of G[alive] on graphs with n <= 64.
struct Counts {
  int count = 0;
  int odd = 0;
  int isolated = 0;
};

/// Component masks of the subgraph induced by `alive`, ordered by lowest
/// vertex.
std::vector<std::uint64_t> components(std::span<const std::uint64_t> rows, std::uint64_t alive);
Counts component_counts(std::span<const std::uint64_t> rows, std::uint64_t alive);
std::uint64_t neighborhood(std::span<const std::uint64_t> rows, std::uint64_t x);
bool connected(std::span<const std::uint64_t> rows, std::uint64_t alive);

} // namespace masks

} // namespace sepgraph
