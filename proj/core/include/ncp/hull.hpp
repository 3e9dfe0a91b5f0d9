#pragma once

// Brute-force exact enumerators. They serve as the geometric oracle that the
// combinatorial constructions are checked against, so they favour
// auditability: every candidate subset is tried.

#include "ncp/polytope.hpp"

#include <span>
#include <vector>

namespace ncp {

struct VertexEnumeration {
  VPolytope polytope;             // vertices in lexicographic order
  std::vector<VertexSet> tight;   // per vertex: indices of tight inequalities
};

/// Solves every dim-subset of inequalities with an invertible normal matrix
/// and keeps the feasible solutions.
/// Throws UnboundedError if the polyhedron has a nonzero recession direction
/// (or the normals do not span), EmptyPolytopeError if no vertex exists.
VertexEnumeration enumerate_vertices(const HPolytope& h);

VPolytope vertices_from_hrep(const HPolytope& h);

/// Tries the hyperplane through every affinely independent dim-subset of
/// points and keeps the supporting ones. Facets come out in canonical order
/// of their vertex sets with outward, primitive-integer normals.
/// Throws SpanError if the points do not affinely span the ambient space.
IncidenceStructure facets_from_vrep(const VPolytope& v);

/// Dimension of the affine hull (-1 for no points).
int affine_dimension(std::span<const Vector> points);

}  // namespace ncp
