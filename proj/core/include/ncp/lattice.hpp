#pragma once

#include "ncp/polytope.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ncp {

using Edge = std::pair<std::uint32_t, std::uint32_t>;  // first < second

/// All nonempty proper faces, obtained by closing the facet vertex sets under
/// intersection. Dimension is the length of the longest chain of faces below
/// (vertices have dimension 0). Entries above `up_to_dim` are dropped; -1
/// keeps everything up to the facets.
FaceLattice face_lattice(const IncidenceStructure& inc, int up_to_dim = -1);

/// Same faces, dimensions taken from the affine rank of their points. Throws
/// ConstructionError if the two dimension assignments disagree.
FaceLattice face_lattice(const IncidenceStructure& inc, std::span<const Vector> points,
                         int up_to_dim = -1);

/// 1-faces as sorted index pairs.
std::vector<Edge> graph_of(const FaceLattice& lattice);
std::vector<Edge> graph_of(const IncidenceStructure& inc);

/// Every k-face has exactly 2^k vertices, for all k the lattice lists.
bool is_cubical(const FaceLattice& lattice);
bool is_cubical(const IncidenceStructure& inc);

/// Labels vertices 0..vertex_count-1 by bit patterns in {0,1}^n (bit k set
/// means + in position k) so that edges are exactly the single-bit flips.
/// Vertex 0 gets the all-minus label. Empty if the graph is not the n-cube
/// graph.
std::optional<std::vector<std::uint64_t>> hypercube_graph_iso(std::span<const Edge> edges,
                                                              std::size_t vertex_count,
                                                              std::size_t n);

}  // namespace ncp
