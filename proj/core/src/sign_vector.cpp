#include "ncp/sign_vector.hpp"

#include "ncp/errors.hpp"

#include <algorithm>

namespace ncp {

Sign sign_of(int value) {
  return value > 0 ? Sign::Plus : (value < 0 ? Sign::Minus : Sign::Zero);
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<Sign> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '-') {
      out.push_back(Sign::Minus);
    } else if (c == '+') {
      out.push_back(Sign::Plus);
    } else if (c == '0') {
      out.push_back(Sign::Zero);
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212
      out.push_back(Sign::Minus);
      i += 2;
    } else {
      throw InputError("malformed sign vector: '" + std::string(text) + "'");
    }
  }
  return SignVector(std::move(out));
}

SignVector SignVector::from_bits(std::size_t n, std::uint64_t bits) {
  if (n > 64) throw DimensionError("from_bits supports at most 64 coordinates");
  SignVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = ((bits >> k) & 1U) != 0 ? Sign::Plus : Sign::Minus;
  return v;
}

std::size_t SignVector::zero_count() const {
  return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), Sign::Zero));
}

std::uint64_t SignVector::bits() const {
  if (size() > 64) throw DimensionError("bits() supports at most 64 coordinates");
  std::uint64_t b = 0;
  for (std::size_t k = 0; k < size(); ++k) {
    if (entries_[k] == Sign::Zero) throw InputError("bits() of a non-vertex sign vector");
    if (entries_[k] == Sign::Plus) b |= std::uint64_t{1} << k;
  }
  return b;
}

std::optional<SignVector> SignVector::meet(const SignVector& other) const {
  if (size() != other.size()) throw DimensionError("meet of sign vectors of different length");
  SignVector out(size());
  for (std::size_t k = 0; k < size(); ++k) {
    const Sign a = entries_[k];
    const Sign b = other[k];
    if (a != Sign::Zero && b != Sign::Zero && a != b) return std::nullopt;
    out[k] = a != Sign::Zero ? a : b;
  }
  return out;
}

bool SignVector::contains(const SignVector& face) const {
  if (size() != face.size()) throw DimensionError("contains: length mismatch");
  for (std::size_t k = 0; k < size(); ++k) {
    if (entries_[k] != Sign::Zero && face[k] != entries_[k]) return false;
  }
  return true;
}

std::string SignVector::to_string() const {
  std::string s;
  s.reserve(size());
  for (auto e : entries_) s.push_back(e == Sign::Plus ? '+' : (e == Sign::Minus ? '-' : '0'));
  return s;
}

std::vector<std::uint64_t> vertex_bits(const SignVector& face) {
  std::uint64_t base = 0;
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < face.size(); ++k) {
    if (face[k] == Sign::Plus) base |= std::uint64_t{1} << k;
    if (face[k] == Sign::Zero) free.push_back(k);
  }
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << free.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
    std::uint64_t bits = base;
    for (std::size_t b = 0; b < free.size(); ++b)
      if (((m >> b) & 1U) != 0) bits |= std::uint64_t{1} << free[b];
    out.push_back(bits);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVector> cube_faces(std::size_t n, std::size_t k) {
  std::vector<SignVector> out;
  if (k > n) return out;
  // Odometer over {-,0,+}^n in lexicographic order, keeping k zeroes.
  SignVector v(n, Sign::Minus);
  while (true) {
    if (v.zero_count() == k) out.push_back(v);
    std::size_t i = n;
    while (i > 0 && v[i - 1] == Sign::Plus) {
      v[i - 1] = Sign::Minus;
      --i;
    }
    if (i == 0) break;
    v[i - 1] = static_cast<Sign>(to_int(v[i - 1]) + 1);
  }
  return out;
}

}  // namespace ncp
