#include "ncp/vertex_set.hpp"

#include "ncp/errors.hpp"

#include <bit>

namespace ncp {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

void require_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) throw DimensionError("vertex sets over different universes");
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<std::uint32_t> members)
    : VertexSet(universe) {
  for (auto m : members) insert(m);
}

VertexSet VertexSet::from_indices(std::size_t universe, std::span<const std::uint32_t> members) {
  VertexSet s(universe);
  for (auto m : members) s.insert(m);
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

void VertexSet::insert(std::size_t i) {
  if (i >= universe_) throw DimensionError("vertex index out of range");
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void VertexSet::erase(std::size_t i) {
  if (i >= universe_) throw DimensionError("vertex index out of range");
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

bool VertexSet::contains(std::size_t i) const {
  return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

VertexSet VertexSet::operator&(const VertexSet& rhs) const {
  require_same_universe(*this, rhs);
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & rhs.words_[i];
  return r;
}

VertexSet VertexSet::operator|(const VertexSet& rhs) const {
  require_same_universe(*this, rhs);
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | rhs.words_[i];
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& rhs) const {
  require_same_universe(*this, rhs);
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~rhs.words_[i];
  return r;
}

std::vector<std::uint32_t> VertexSet::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t VertexSet::hash() const noexcept {
  std::size_t h = universe_;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return a.indices() < b.indices();
}

}  // namespace ncp
