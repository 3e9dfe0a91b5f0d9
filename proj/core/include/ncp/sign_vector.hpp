#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncp {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<std::int8_t>(s)); }
inline int to_int(Sign s) { return static_cast<int>(s); }
Sign sign_of(int value);

/// Element of {-,0,+}^n naming a face of the n-cube: zero positions are the
/// free coordinates, so a k-face has exactly k zeroes. Vertices ({+-}^n) double
/// as vertex labels.
///
/// Lexicographic order uses - < 0 < +.
class SignVector {
public:
  SignVector() = default;
  explicit SignVector(std::size_t n, Sign fill = Sign::Zero) : entries_(n, fill) {}
  explicit SignVector(std::vector<Sign> entries) : entries_(std::move(entries)) {}

  /// Parses text such as "-+00+0"; also accepts the Unicode minus sign.
  static SignVector parse(std::string_view text);

  /// Vertex label for bit pattern `bits`: position k is + iff bit k is set.
  static SignVector from_bits(std::size_t n, std::uint64_t bits);

  std::size_t size() const noexcept { return entries_.size(); }
  Sign operator[](std::size_t i) const { return entries_[i]; }
  Sign& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Sign>& entries() const noexcept { return entries_; }

  std::size_t zero_count() const;
  bool is_vertex() const { return zero_count() == 0; }

  /// Inverse of from_bits; only valid for vertices with size() <= 64.
  std::uint64_t bits() const;

  /// Cube-face meet: positions where both are nonzero must agree.
  /// Returns nullopt when the faces are disjoint.
  std::optional<SignVector> meet(const SignVector& other) const;

  /// True iff this face of the cube contains `face` (as a subface).
  bool contains(const SignVector& face) const;

  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

private:
  std::vector<Sign> entries_;
};

/// Bit patterns (see SignVector::from_bits) of the cube vertices in a face,
/// increasing. Requires size() < 64.
std::vector<std::uint64_t> vertex_bits(const SignVector& face);

/// All faces of the n-cube with exactly k zero positions, in lexicographic
/// order.
std::vector<SignVector> cube_faces(std::size_t n, std::size_t k);

}  // namespace ncp
