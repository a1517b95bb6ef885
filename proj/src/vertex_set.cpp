#include "sepgraph/vertex_set.hpp"

#include "sepgraph/error.hpp"

namespace sepgraph {

namespace {
std::size_t word_count(int n) { return static_cast<std::size_t>((n + 63) / 64); }
} // namespace

VertexSet::VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw DomainError("negative vertex-set universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) {
    if (v < 0 || v >= universe) throw DomainError("vertex " + std::to_string(v) + " outside universe");
    insert(v);
  }
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw DomainError("from_mask requires a universe of at most 64 vertices");
  VertexSet s(universe);
  if (universe > 0) s.words_[0] = mask & bits::full_mask(universe);
  return s;
}

VertexSet VertexSet::from_members(int universe, const std::vector<int>& members) {
  VertexSet s(universe);
  for (int v : members) {
    if (v < 0 || v >= universe) throw DomainError("vertex " + std::to_string(v) + " outside universe");
    s.insert(v);
  }
  return s;
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += bits::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    bits::for_each(words_[i], [&](int b) { out.push_back(static_cast<int>(i * 64) + b); });
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (n_ > 64) throw DomainError("mask() requires a universe of at most 64 vertices");
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (n_ != o.n_) throw DomainError("vertex sets over different universes");
}

void VertexSet::trim() {
  if (n_ % 64 != 0 && !words_.empty()) words_.back() &= bits::full_mask(n_ % 64);
}

} // namespace sepgraph
