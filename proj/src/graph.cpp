#include "sepgraph/graph.hpp"

#include "sepgraph/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace sepgraph {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  words_ = static_cast<std::size_t>((n + 63) / 64);
  rows_.assign(words_ * static_cast<std::size_t>(n), 0);
  degrees_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    set_edge(u, v);
  }
  finalize();
}

void Graph::set_edge(int u, int v) {
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::finalize() {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) {
    int d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += bits::popcount(rows_[static_cast<std::size_t>(v) * words_ + w]);
    degrees_[v] = d;
    twice += d;
  }
  m_ = static_cast<int>(twice / 2);
}

int Graph::min_degree() const {
  return n_ == 0 ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

int Graph::max_degree() const {
  return n_ == 0 ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

VertexSet Graph::neighbors(int v) const {
  VertexSet s(n_);
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) s.insert(u);
  return s;
}

std::vector<std::uint64_t> Graph::row_masks() const {
  if (n_ > 64) throw DomainError("row_masks() requires at most 64 vertices");
  return rows_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_regular() const {
  return std::adjacent_find(degrees_.begin(), degrees_.end(), std::not_equal_to<>()) == degrees_.end();
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n_; ++v)
      if (!seen[v] && adjacent(u, v)) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
  }
  return reached == n_;
}

bool Graph::has_isolated_vertex() const {
  return std::find(degrees_.begin(), degrees_.end(), 0) != degrees_.end();
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<int> ids = keep.members();
  Graph h(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (adjacent(ids[i], ids[j])) h.set_edge(static_cast<int>(i), static_cast<int>(j));
  h.finalize();
  return h;
}

Graph Graph::without_vertex(int v) const {
  VertexSet keep = VertexSet::full(n_);
  keep.erase(v);
  return induced(keep);
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  Graph h = *this;
  h.set_edge(u, v);
  h.finalize();
  return h;
}

Graph Graph::without_edge(int u, int v) const {
  Graph h = *this;
  h.rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  h.rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  h.finalize();
  return h;
}

long long edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  long long count = 0;
  for (int u : x.members())
    for (int v : y.members())
      if (g.adjacent(u, v)) ++count;
  return count;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out(g.order());
  for (int u : x.members()) out |= g.neighbors(u);
  return out;
}

long long volume(const Graph& g, const VertexSet& x) {
  long long total = 0;
  for (int v : x.members()) total += g.degree(v);
  return total;
}

ComponentSplit components_after_removal(const Graph& g, const VertexSet& s) {
  const int n = g.order();
  ComponentSplit out;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : s.members()) seen[v] = 1;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp(n);
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.insert(u);
      for (int v = 0; v < n; ++v)
        if (!seen[v] && g.adjacent(u, v)) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
    const int size = comp.size();
    ++out.count;
    if (size % 2 == 1) ++out.odd;
    if (size == 1) ++out.isolated;
    out.components.push_back(std::move(comp));
  }
  return out;
}

std::optional<Bipartition> bipartition_of(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bip{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) (color[v] == 0 ? bip.left : bip.right).insert(v);
  return bip;
}

namespace masks {

std::vector<std::uint64_t> components(std::span<const std::uint64_t> rows, std::uint64_t alive) {
  std::vector<std::uint64_t> out;
  while (alive) {
    std::uint64_t comp = alive & (~alive + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      bits::for_each(frontier, [&](int v) { next |= rows[v]; });
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    alive &= ~comp;
  }
  return out;
}

Counts component_counts(std::span<const std::uint64_t> rows, std::uint64_t alive) {
  Counts c;
  while (alive) {
    std::uint64_t comp = alive & (~alive + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      bits::for_each(frontier, [&](int v) { next |= rows[v]; });
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    const int size = bits::popcount(comp);
    ++c.count;
    c.odd += size & 1;
    c.isolated += size == 1;
    alive &= ~comp;
  }
  return c;
}

std::uint64_t neighborhood(std::span<const std::uint64_t> rows, std::uint64_t x) {
  std::uint64_t out = 0;
  bits::for_each(x, [&](int v) { out |= rows[v]; });
  return out;
}

bool connected(std::span<const std::uint64_t> rows, std::uint64_t alive) {
  if (!alive) return true;
  std::uint64_t comp = alive & (~alive + 1);
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    bits::for_each(frontier, [&](int v) { next |= rows[v]; });
    next &= alive & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp == alive;
}

} // namespace masks

} // namespace sepgraph
