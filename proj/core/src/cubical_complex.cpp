#include "ncp/cubical_complex.hpp"

#include "ncp/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ncp {

std::size_t CubeCell::dim() const {
  if (corners.empty() || !std::has_single_bit(corners.size())) {
    throw InputError("cube cell needs 2^k corners");
  }
  return static_cast<std::size_t>(std::countr_zero(corners.size()));
}

std::vector<VertexSet> CubeCell::faces(std::size_t universe) const {
  const std::size_t k = dim();
  std::vector<VertexSet> out;
  for (std::size_t z = 0; z <= k; ++z) {
    for (const auto& face : cube_faces(k, z)) {
      VertexSet s(universe);
      for (auto b : vertex_bits(face)) s.insert(corners[b]);
      out.push_back(std::move(s));
    }
  }
  return out;
}

void CubicalComplex::finish() {
  for (auto& group : faces_) std::sort(group.begin(), group.end(), canonical_less);
  facets_.clear();
  // A face is maximal iff no face one dimension up contains it.
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    for (const auto& f : faces_[k]) {
      bool maximal = true;
      if (k + 1 < faces_.size()) {
        for (const auto& g : faces_[k + 1]) {
          if (f.is_subset_of(g)) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) facets_.push_back(f);
    }
  }
  std::sort(facets_.begin(), facets_.end(), canonical_less);
}

CubicalComplex CubicalComplex::from_cells(std::size_t vertex_count, std::span<const CubeCell> cells) {
  CubicalComplex c;
  c.vertex_count_ = vertex_count;
  std::unordered_map<VertexSet, std::size_t> dims;
  for (const auto& cell : cells) {
    for (const auto& corner : cell.corners)
      if (corner >= vertex_count) throw InputError("cube cell corner out of range");
    const auto faces = cell.faces(vertex_count);
    for (const auto& f : faces) {
      const std::size_t k = static_cast<std::size_t>(std::countr_zero(f.count()));
      if (f.count() != (std::size_t{1} << k)) {
        throw ConstructionError("cube cell with repeated corners");
      }
      const auto [it, inserted] = dims.emplace(f, k);
      if (!inserted && it->second != k) throw ConstructionError("face listed with two dimensions");
      if (inserted) {
        if (c.faces_.size() <= k) c.faces_.resize(k + 1);
        c.faces_[k].push_back(f);
      }
    }
  }
  c.finish();
  return c;
}

CubicalComplex CubicalComplex::from_cube_faces(std::size_t n, std::span<const SignVector> faces) {
  if (n >= 24) throw InputError("from_cube_faces: n too large");
  std::set<SignVector> seen;
  CubicalComplex c;
  c.vertex_count_ = std::size_t{1} << n;
  for (const auto& top : faces) {
    if (top.size() != n) throw DimensionError("cube face of the wrong length");
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < n; ++k)
      if (top[k] == Sign::Zero) free.push_back(k);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      SignVector g = top;
      std::uint64_t r = code;
      for (auto k : free) {
        g[k] = static_cast<Sign>(static_cast<int>(r % 3) - 1);
        r /= 3;
      }
      if (!seen.insert(g).second) continue;
      const std::size_t dim = g.zero_count();
      if (c.faces_.size() <= dim) c.faces_.resize(dim + 1);
      c.faces_[dim].push_back(cube_face_set(g));
    }
  }
  for (std::uint64_t b = 0; b < c.vertex_count_; ++b) c.labels_.push_back(SignVector::from_bits(n, b));
  c.finish();
  return c;
}

FVector CubicalComplex::f_vector() const { return ncp::f_vector(faces_); }

bool CubicalComplex::contains(const VertexSet& face) const { return dimension_of(face).has_value(); }

std::optional<std::size_t> CubicalComplex::dimension_of(const VertexSet& face) const {
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    const auto& group = faces_[k];
    if (std::binary_search(group.begin(), group.end(), face, canonical_less)) return k;
  }
  return std::nullopt;
}

bool CubicalComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const VertexSet& f) { return dimension_of(f) == dim(); });
}

bool CubicalComplex::is_cubical() const {
  for (std::size_t k = 0; k < faces_.size(); ++k)
    for (const auto& f : faces_[k])
      if (f.count() != (std::size_t{1} << k)) return false;
  return true;
}

bool CubicalComplex::is_closed_under_intersection() const {
  std::vector<VertexSet> all;
  for (const auto& g : faces_) all.insert(all.end(), g.begin(), g.end());
  std::unordered_set<VertexSet> listed(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const VertexSet m = all[i] & all[j];
      if (!m.empty() && !listed.contains(m)) return false;
    }
  }
  return true;
}

std::size_t CubicalComplex::facet_degree(const VertexSet& face) const {
  return static_cast<std::size_t>(std::count_if(
      facets_.begin(), facets_.end(), [&](const VertexSet& f) { return face.is_subset_of(f); }));
}

CubicalComplex CubicalComplex::restricted_to(std::span<const VertexSet> keep) const {
  CubicalComplex c;
  c.vertex_count_ = vertex_count_;
  c.labels_ = labels_;
  c.faces_.resize(faces_.size());
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    for (const auto& f : faces_[k]) {
      if (std::any_of(keep.begin(), keep.end(), [&](const VertexSet& g) { return f.is_subset_of(g); })) {
        c.faces_[k].push_back(f);
      }
    }
  }
  while (!c.faces_.empty() && c.faces_.back().empty()) c.faces_.pop_back();
  c.finish();
  return c;
}

VertexSet cube_face_set(const SignVector& face) {
  VertexSet s(std::size_t{1} << face.size());
  for (auto b : vertex_bits(face)) s.insert(b);
  return s;
}

std::optional<SignVector> cube_face_of(const VertexSet& vertices, std::size_t n) {
  if (vertices.empty()) return std::nullopt;
  const auto idx = vertices.indices();
  std::uint64_t all_and = ~std::uint64_t{0}, all_or = 0;
  for (auto b : idx) {
    all_and &= b;
    all_or |= b;
  }
  SignVector v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const bool a = ((all_and >> k) & 1U) != 0, o = ((all_or >> k) & 1U) != 0;
    v[k] = a ? Sign::Plus : (o ? Sign::Zero : Sign::Minus);
  }
  if (cube_face_set(v) != vertices) return std::nullopt;
  return v;
}

}  // namespace ncp
