#include "sepgraph/matching.hpp"

#include "sepgraph/error.hpp"

#include <queue>

namespace sepgraph {

namespace {

// Edmonds' algorithm in the contracted-base formulation. Vertices with
// alive[v] == 0 are treated as deleted.
class Blossom {
public:
  explicit Blossom(const Graph& g) : n_(g.order()), adj_(n_), mate_(n_, -1), alive_(n_, 1) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).members();
  }
  Blossom(const Graph& g, const std::vector<char>& alive) : Blossom(g) { alive_ = alive; }

  int maximize() {
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || mate_[v] != -1) continue;
      for (int w : adj_[v])
        if (alive_[w] && mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v)
      if (alive_[v] && mate_[v] == -1) augment(v);
    return size();
  }

  bool augment(int root) {
    int v = find_path(root);
    if (v == -1) return false;
    while (v != -1) {
      const int pv = parent_[v];
      const int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
    return true;
  }

  int size() const {
    int s = 0;
    for (int v = 0; v < n_; ++v)
      if (alive_[v] && mate_[v] > v) ++s;
    return s;
  }

  // Deletes the listed vertices and returns the partners left unmatched.
  std::vector<int> remove(std::initializer_list<int> vs) {
    std::vector<int> freed;
    for (int v : vs) alive_[v] = 0;
    for (int v : vs) {
      const int p = mate_[v];
      mate_[v] = -1;
      if (p == -1) continue;
      mate_[p] = -1;
      if (alive_[p]) freed.push_back(p);
    }
    return freed;
  }

  int mate(int v) const { return mate_[v]; }
  bool alive(int v) const { return alive_[v]; }
  std::vector<int> mates() const { return mate_; }
  const std::vector<char>& alive_flags() const { return alive_; }
  void restore(std::vector<int> mates, std::vector<char> alive) {
    mate_ = std::move(mates);
    alive_ = std::move(alive);
  }

private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (!alive_[to] || base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int cur = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_;
  std::vector<char> alive_;
  std::vector<int> parent_, base_;
  std::vector<char> used_, in_blossom_;
};

// Size of a maximum matching after deleting `vs`, starting from the current
// maximum matching; b is restored afterwards.
int size_without(Blossom& b, int current, std::initializer_list<int> vs) {
  auto mates = b.mates();
  auto alive = b.alive_flags();
  int removed = 0;
  for (int v : vs)
    if (b.mate(v) != -1) ++removed;
  // A matched pair inside vs loses one edge, not two.
  if (vs.size() == 2 && b.mate(*vs.begin()) == *(vs.begin() + 1)) removed = 1;
  int size = current - removed;
  for (int p : b.remove(vs))
    if (b.mate(p) == -1 && b.augment(p)) ++size;
  b.restore(std::move(mates), std::move(alive));
  return size;
}

std::uint64_t check_mask_order(const Graph& g, int cap, const char* what) {
  enforce_cap(g.order(), cap, what);
  return bits::full_mask(g.order());
}

} // namespace

int matching_number(const Graph& g, const std::vector<char>& alive) {
  Blossom b(g, alive);
  return b.maximize();
}

MaxMatching max_matching(const Graph& g) {
  Blossom b(g);
  const int k = b.maximize();
  MaxMatching out;
  out.alpha_prime = k;
  // Greedy over edges in lexicographic order: keep e when the rest of the
  // graph still has a matching of the remaining size.
  int left = k;
  for (auto [u, v] : g.edges()) {
    if (left == 0) break;
    if (!b.alive(u) || !b.alive(v)) continue;
    auto mates = b.mates();
    auto alive = b.alive_flags();
    int size = left;
    if (b.mate(u) == v) {
      size -= 1;
    } else {
      if (b.mate(u) != -1) --size;
      if (b.mate(v) != -1) --size;
    }
    for (int p : b.remove({u, v}))
      if (size < left - 1 && b.mate(p) == -1 && b.augment(p)) ++size;
    if (size == left - 1) {
      out.matching.emplace_back(u, v);
      --left;
    } else {
      b.restore(std::move(mates), std::move(alive));
    }
  }
  return out;
}

Deficiency berge_tutte_oracle(const Graph& g, const Caps& caps) {
  const std::uint64_t full = check_mask_order(g, caps.exponential, "berge_tutte_oracle");
  const auto rows = g.row_masks();
  Deficiency best{1, VertexSet(g.order())};
  std::uint64_t arg = 0;
  std::uint64_t s = 0;
  do {
    const int d = bits::popcount(s) - masks::component_counts(rows, full & ~s).odd;
    if (d < best.value) {
      best.value = d;
      arg = s;
    }
    s = (s - full) & full;
  } while (s != 0);
  best.set = VertexSet::from_mask(g.order(), arg);
  return best;
}

Deficiency fractional_deficiency_oracle(const Graph& g, const Caps& caps) {
  const std::uint64_t full = check_mask_order(g, caps.exponential, "fractional_deficiency_oracle");
  const auto rows = g.row_masks();
  Deficiency best{1, VertexSet(g.order())};
  std::uint64_t arg = 0;
  std::uint64_t s = 0;
  do {
    const int d = bits::popcount(s) - masks::component_counts(rows, full & ~s).isolated;
    if (d < best.value) {
      best.value = d;
      arg = s;
    }
    s = (s - full) & full;
  } while (s != 0);
  best.set = VertexSet::from_mask(g.order(), arg);
  return best;
}

bool is_factor_critical(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return false;
  Blossom b(g);
  const int k = b.maximize();
  if (k != (n - 1) / 2) return false;
  for (int v = 0; v < n; ++v)
    if (size_without(b, k, {v}) != k) return false;
  return true;
}

bool gallai_factor_critical_oracle(const Graph& g, const Caps& caps) {
  const std::uint64_t full = check_mask_order(g, caps.exponential, "gallai_factor_critical_oracle");
  if (g.order() % 2 == 0) return false;
  const auto rows = g.row_masks();
  for (std::uint64_t s = 1; s != 0 && s <= full; s = (s - full) & full)
    if (masks::component_counts(rows, full & ~s).odd > bits::popcount(s)) return false;
  return true;
}

namespace {

struct Kuhn {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_right;
  std::vector<int> match_left;
  std::vector<char> seen;

  Kuhn(const std::vector<std::vector<int>>& a, int right) : adj(a), match_right(right, -1), match_left(a.size(), -1) {}

  bool try_augment(int u) {
    for (int w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (match_right[w] == -1 || try_augment(match_right[w])) {
        match_right[w] = u;
        match_left[u] = w;
        return true;
      }
    }
    return false;
  }

  int run() {
    int size = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      seen.assign(match_right.size(), 0);
      if (try_augment(static_cast<int>(u))) ++size;
    }
    return size;
  }
};

} // namespace

FractionalMatching fractional_matching(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).members();
  Kuhn k(adj, n);
  const int size = k.run();

  // Koenig: Z = vertices reachable from free left copies by alternating paths.
  std::vector<char> zl(n, 0), zr(n, 0);
  std::queue<int> q;
  for (int u = 0; u < n; ++u)
    if (k.match_left[u] == -1) {
      zl[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (zr[w]) continue;
      zr[w] = 1;
      const int back = k.match_right[w];
      if (back != -1 && !zl[back]) {
        zl[back] = 1;
        q.push(back);
      }
    }
  }
  FractionalMatching out;
  out.alpha_prime_frac = Rational(size, 2);
  out.deficiency_set = VertexSet(n);
  for (int v = 0; v < n; ++v)
    if (!zl[v] && zr[v]) out.deficiency_set.insert(v);
  return out;
}

Rational fractional_matching_number(const Graph& g) { return fractional_matching(g).alpha_prime_frac; }

namespace {

void check_bipartition(const Graph& g, const Bipartition& bip) {
  if (bip.left.universe() != g.order() || bip.right.universe() != g.order() || bip.left.intersects(bip.right) ||
      (bip.left | bip.right) != VertexSet::full(g.order()))
    throw DomainError("bipartition must split the vertex set in two");
  for (auto [u, v] : g.edges())
    if (bip.left.contains(u) == bip.left.contains(v)) throw DomainError("edge inside a side of the bipartition");
}

} // namespace

int bipartite_matching(const Graph& g, const Bipartition& bip) {
  check_bipartition(g, bip);
  const auto left = bip.left.members();
  const auto right = bip.right.members();
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < right.size(); ++i) index[right[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (int w : g.neighbors(left[i]).members()) adj[i].push_back(index[w]);
  Kuhn k(adj, static_cast<int>(right.size()));
  return k.run();
}

int ore_oracle(const Graph& g, const Bipartition& bip, const Caps& caps) {
  check_bipartition(g, bip);
  enforce_cap(g.order(), caps.exponential, "ore_oracle");
  const auto rows = g.row_masks();
  const std::uint64_t left = bip.left.mask();
  int best = 0; // S = empty
  for (std::uint64_t s = (0 - left) & left; s != 0; s = (s - left) & left)
    best = std::min(best, bits::popcount(masks::neighborhood(rows, s)) - bits::popcount(s));
  return bip.left.size() + best;
}

MatchingReport matching_report(const Graph& g) {
  const int n = g.order();
  MatchingReport r;
  auto mm = max_matching(g);
  r.alpha_prime = mm.alpha_prime;
  r.matching = std::move(mm.matching);

  // Gallai-Edmonds: D = vertices missed by some maximum matching, A = N(D) - D.
  Blossom b(g);
  const int k = b.maximize();
  VertexSet d(n);
  for (int v = 0; v < n; ++v)
    if (b.mate(v) == -1 || size_without(b, k, {v}) == k) d.insert(v);
  r.deficiency_set = neighborhood(g, d) - d;
  r.deficiency = r.deficiency_set.size() - components_after_removal(g, r.deficiency_set).odd;
  r.has_perfect = n % 2 == 0 && 2 * r.alpha_prime == n;
  r.is_factor_critical = is_factor_critical(g);

  auto fm = fractional_matching(g);
  r.alpha_prime_frac = fm.alpha_prime_frac;
  r.frac_deficiency_set = fm.deficiency_set;
  r.frac_deficiency = fm.deficiency_set.size() - components_after_removal(g, fm.deficiency_set).isolated;
  r.has_frac_perfect = r.alpha_prime_frac * Rational(2) == Rational(n);
  return r;
}

} // namespace sepgraph
