#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sepgraph {

/// Subset of the vertex range 0..n-1 of a particular graph. Set algebra
/// between sets of different universes is a DomainError.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);

  static VertexSet full(int universe);
  /// Bit v of `mask` selects vertex v; requires universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);
  static VertexSet from_members(int universe, const std::vector<int>& members);

  int universe() const { return n_; }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const;
  std::vector<int> members() const;
  /// Requires universe <= 64.
  std::uint64_t mask() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  VertexSet complement() const;
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// "{0,2,5}"
  std::string to_string() const;

private:
  void check_same_universe(const VertexSet& o) const;
  void trim();

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace bits {

inline int popcount(std::uint64_t x) { return std::popcount(x); }
inline int lowest(std::uint64_t x) { return std::countr_zero(x); }
inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Calls f(v) for every set bit v of x, ascending.
template <class F>
void for_each(std::uint64_t x, F&& f) {
  while (x) {
    f(std::countr_zero(x));
    x &= x - 1;
  }
}

} // namespace bits

} // namespace sepgraph
