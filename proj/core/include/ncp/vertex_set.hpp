#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace ncp {

/// A subset of {0, ..., universe-1}: the canonical identity of a face.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<std::uint32_t> members);
  static VertexSet from_indices(std::size_t universe, std::span<const std::uint32_t> members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  void insert(std::size_t i);
  void erase(std::size_t i);
  bool contains(std::size_t i) const;
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet operator&(const VertexSet& rhs) const;
  VertexSet operator|(const VertexSet& rhs) const;
  VertexSet operator-(const VertexSet& rhs) const;

  /// Members in increasing order.
  std::vector<std::uint32_t> indices() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet&, const VertexSet&) = default;

  std::size_t hash() const noexcept;

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Orders by size first, then by the sorted member lists. Used wherever output
/// must be deterministic and readable.
bool canonical_less(const VertexSet& a, const VertexSet& b);

}  // namespace ncp

template <>
struct std::hash<ncp::VertexSet> {
  std::size_t operator()(const ncp::VertexSet& s) const noexcept { return s.hash(); }
};
