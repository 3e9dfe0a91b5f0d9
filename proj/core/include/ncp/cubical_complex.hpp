#pragma once

#include "ncp/polytope.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ncp {

/// A combinatorial k-cube placed on vertex IDs: corners[b] is the vertex at
/// local bit pattern b, so corners.size() == 2^k.
struct CubeCell {
  std::vector<std::uint32_t> corners;

  std::size_t dim() const;
  /// Vertex sets of all nonempty faces of the cell, including itself.
  std::vector<VertexSet> faces(std::size_t universe) const;
};

/// Abstract cubical cell complex with faces identified by vertex sets.
class CubicalComplex {
public:
  CubicalComplex() = default;

  /// The complex generated by `cells` (all their faces). Throws
  /// ConstructionError if a vertex set arises with two different dimensions.
  static CubicalComplex from_cells(std::size_t vertex_count, std::span<const CubeCell> cells);

  /// The complex generated by faces of the n-cube given as sign vectors;
  /// vertex i is the cube vertex with SignVector::from_bits(n, i).
  static CubicalComplex from_cube_faces(std::size_t n, std::span<const SignVector> faces);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t dim() const noexcept { return faces_.empty() ? 0 : faces_.size() - 1; }
  /// faces()[k] lists the k-faces in canonical order.
  const FaceLattice& faces() const noexcept { return faces_; }
  /// Maximal faces (in canonical order).
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  FVector f_vector() const;

  /// Labels for vertices, when the complex lives on the cube's vertex set.
  const std::vector<SignVector>& labels() const noexcept { return labels_; }

  bool contains(const VertexSet& face) const;
  /// Dimension of a listed face, or nullopt.
  std::optional<std::size_t> dimension_of(const VertexSet& face) const;

  /// All maximal faces have the same dimension.
  bool is_pure() const;
  /// Every k-face has 2^k vertices.
  bool is_cubical() const;
  /// The intersection of any two faces is empty or a face.
  bool is_closed_under_intersection() const;

  /// Number of facets containing `face`.
  std::size_t facet_degree(const VertexSet& face) const;

  /// Subcomplex of faces contained in some facet from `keep`.
  CubicalComplex restricted_to(std::span<const VertexSet> keep) const;

private:
  void finish();

  std::size_t vertex_count_ = 0;
  FaceLattice faces_;
  std::vector<VertexSet> facets_;
  std::vector<SignVector> labels_;
};

/// Vertex set (over bit-pattern IDs) of a face of the n-cube.
VertexSet cube_face_set(const SignVector& face);

/// Inverse of cube_face_set when `vertices` is a cube face; nullopt otherwise.
std::optional<SignVector> cube_face_of(const VertexSet& vertices, std::size_t n);

}  // namespace ncp
