#pragma once

#include "ncp/cubical_complex.hpp"

#include <string>
#include <vector>

namespace ncp {

/// The three facets of C_4^6 that are cut out, and the 2-faces named after
/// them (X\Y is the 2-face of X opposite to X cap Y).
struct SurgeryFacets {
  SignVector a, b, c;
  SignVector a_cap_b, b_cap_c;      // interior 2-faces of the ball
  SignVector a_minus_b, c_minus_b;  // top and bottom of the new central cube
};
SurgeryFacets surgery_facets();

/// Turns a cube face into a cell on bit-pattern vertex IDs; corner b is the
/// vertex whose free coordinates (in increasing order) carry the bits of b.
CubeCell cube_cell_of(const SignVector& face);

/// Facets of C_4^6 as cube faces, from the cubical evenness criterion.
std::vector<SignVector> c46_facets();

/// The boundary complex of C_4^6.
CubicalComplex c46_complex();

struct Phi {
  CubicalComplex ball;       // generated by A, B, C
  CubicalComplex boundary;   // 2-faces lying in exactly one of A, B, C
};

/// Throws ConstructionError if A, B or C is not a facet of C_4^6.
Phi build_phi();

struct IntersectionLemmaReport {
  std::size_t facets_checked = 0;
  std::vector<SignVector> violations;  // facets meeting the boundary in more than one face
  bool pairs_separated = false;        // no facet meets both members of each pair
  bool ok() const { return violations.empty() && pairs_separated; }
};

/// Every facet of C_4^6 other than A, B, C meets the boundary of Phi in one
/// face or not at all; and no facet meets both 2-faces of each of the pairs
/// (A\B, B\A), (B\C, C\B), (A\B, C\B).
IntersectionLemmaReport intersection_lemma_report();
bool intersection_lemma_check();

/// Number of facets of C_4^6 containing each of the eight edges of A cap B
/// and B cap C, in edge order.
std::vector<std::pair<SignVector, std::size_t>> shared_edge_degrees();

struct SphereReport {
  std::size_t dim = 0;
  bool ridges_in_two_facets = false;
  bool connected = false;
  long euler_characteristic = 0;
  bool euler_ok = false;
  bool vertex_links_ok = false;
  std::vector<std::string> failures;
  bool ok() const { return ridges_in_two_facets && connected && euler_ok && vertex_links_ok; }
};

/// Pure complex of dimension D checks: every (D-1)-face lies in exactly two
/// facets, the facet adjacency graph is connected, the Euler characteristic is
/// 1 + (-1)^D, and every vertex link is a connected closed pseudomanifold with
/// Euler characteristic 1 + (-1)^(D-1).
SphereReport verify_sphere_like(const CubicalComplex& c);

struct Psi {
  CubicalComplex sphere;
  std::vector<CubeCell> new_cells;  // the central cube, then the four side cubes
  std::vector<std::pair<std::uint32_t, std::uint32_t>> new_edges;
};

/// Removes A, B, C and the two interior 2-faces and glues in the five-cube
/// ball. Throws ConstructionError if the result is not a closed, cubical,
/// intersection-closed pseudomanifold.
Psi build_psi();

}  // namespace ncp
