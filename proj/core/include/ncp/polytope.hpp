#pragma once

#include "ncp/exact.hpp"
#include "ncp/sign_vector.hpp"
#include "ncp/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ncp {

/// normal . x <= rhs
struct Inequality {
  Vector normal;
  Rational rhs;

  bool operator==(const Inequality&) const = default;
};

/// Inequality description. The order of `inequalities` is part of the
/// identity: constructions rely on fixed constraint indices.
struct HPolytope {
  std::size_t dim = 0;
  std::vector<Inequality> inequalities;

  /// Throws DimensionError / InputError on malformed systems (wrong lengths,
  /// all-zero normals).
  void validate() const;
};

/// Vertex description, optionally labeled by sign vectors (one per point).
struct VPolytope {
  std::size_t dim = 0;
  std::vector<Vector> points;
  std::vector<SignVector> labels;

  bool labeled() const { return !labels.empty(); }

  /// Points pairwise distinct; labels (if any) pairwise distinct, of uniform
  /// length and one per point.
  void validate() const;
};

using FVector = std::vector<std::int64_t>;

/// faces_by_dim[k] lists the k-faces as vertex sets, in canonical order.
using FaceLattice = std::vector<std::vector<VertexSet>>;

/// Vertex-facet incidences of a polytope. When produced by the hull oracle,
/// facet_inequalities[i] is the outward primitive-integer-normal inequality of
/// facets[i].
struct IncidenceStructure {
  std::size_t dim = 0;
  std::size_t vertex_count = 0;
  std::vector<VertexSet> facets;
  std::vector<Inequality> facet_inequalities;

  std::size_t facet_count() const { return facets.size(); }
};

/// Positive rescaling so the normal is a primitive integer vector.
Inequality canonical_form(const Inequality& ineq);

FVector f_vector(const FaceLattice& lattice);

}  // namespace ncp
