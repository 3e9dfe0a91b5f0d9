#pragma once

#include "ncp/cubical_complex.hpp"
#include "ncp/polytope.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncp {

/// Faces of the n-cube of dimension <= r, by dimension then lexicographically.
std::vector<SignVector> cube_skeleton(std::size_t n, std::size_t r);

/// Vertices of `inc` carry distinct labels in {+-}^n. True iff every cube
/// face of dimension <= r has as label set the vertex set of a face of `inc`
/// of the same dimension, and `inc` has no other faces of dimension <= r.
/// Throws InputError for missing or non-vertex labels.
bool verify_skeleton_equivalence(const IncidenceStructure& inc, std::span<const SignVector> labels,
                                 std::size_t r);

/// Facets of a labeled polytope read as cube faces (positions where all
/// vertex labels agree keep that sign), sorted. Throws ConstructionError if
/// some facet's labels do not span a cube face with matching vertex count.
std::vector<SignVector> facets_as_cube_faces(const IncidenceStructure& inc,
                                             std::span<const SignVector> labels);

/// Same test against a precomputed face lattice.
bool verify_skeleton_equivalence(const FaceLattice& lattice, std::span<const SignVector> labels,
                                 std::size_t r);

/// sum_{i=k}^{d-1} (-1)^i 2^(i-k) C(i,k) f_i == (-1)^(d-1) f_k for 0 <= k <= d-2.
bool dehn_sommerville_check(const FVector& f, std::size_t d);

/// Solves the equations above for f_m..f_{d-1} given f_0..f_{m-1}. Empty if
/// the known entries do not determine the rest.
std::optional<FVector> dehn_sommerville_complete(const FVector& known, std::size_t d);

/// Every face of dimension <= min(2r, d-1) has 2^dim vertices.
bool double_r_cubicality_check(const FaceLattice& lattice, std::size_t r, std::size_t d);

struct UpperSubdivision {
  std::size_t n = 0;
  std::size_t d = 0;
  Rational epsilon;
  /// Upper facets of C_{d+1}^n as d-faces of the n-cube, sorted.
  std::vector<SignVector> tiles;
  /// Facets of C_d^n from the hull oracle, as cube faces, sorted.
  std::vector<SignVector> boundary;
  CubicalComplex complex;           // generated by the tiles
  bool covers_vertices = false;     // every cube vertex lies in a tile
  bool boundary_matches = false;    // cells in one tile == facets of C_d^n
  bool interior_cells_shared = false;  // every other (d-1)-cell in exactly two tiles
  std::size_t checked_dim = 0;      // floor(d/2) - 1
  /// Faces of dimension <= checked_dim not contained in the boundary.
  std::vector<SignVector> interior_faces;
  /// Smallest dimension of an interior face, if any.
  std::optional<std::size_t> lowest_interior_dim;
};

/// Projects C_{d+1}^n to C_d^n by dropping its first coordinate and collects
/// the facets whose outward normal has a positive first component. Checks
/// that these tile C_d^n and lists interior faces up to floor(d/2) - 1.
/// The epsilon is the first value of the halving ladder certified for both
/// (n, d) and (n, d+1). Throws ConstructionError if the tiling checks fail.
UpperSubdivision upper_face_subdivision(std::size_t n, std::size_t d);

/// Everything `verify` reports for one (n, d).
struct NeighborlyReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  Rational epsilon;
  bool epsilon_certified = false;
  std::int64_t gale_count = 0;
  std::int64_t formula_count = 0;
  bool oracle_run = false;
  bool oracle_matches_gale = false;
  FVector f_vector;                       // of the oracle polytope, else from the criterion
  bool cubical = false;
  bool skeleton_at_r = false;
  std::optional<bool> skeleton_above_bound;  // at floor(d/2), only for n > d
  std::optional<bool> cube_graph;            // only when the graph is the n-cube's (r >= 1)
  bool dehn_sommerville = false;
  std::optional<bool> ds_determines_facets;  // even d only
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs the checks for C_d^n: facet count against the formula, the hull
/// oracle against the criterion, cubicality, skeleton equivalence at r
/// (default floor(d/2) - 1) and its failure at floor(d/2), the cube graph,
/// and Dehn-Sommerville. Without `oracle` the lattice comes from the criterion
/// alone. Throws InputError unless n >= d >= 2.
NeighborlyReport verify_neighborly(std::size_t n, std::size_t d, std::optional<std::size_t> r = {},
                                   std::optional<Rational> epsilon = {}, bool oracle = true);

}  // namespace ncp
