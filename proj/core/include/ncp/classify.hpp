#pragma once

#include "ncp/cubical_complex.hpp"
#include "ncp/polytope.hpp"

#include <string>
#include <vector>

namespace ncp {

/// Parameters of the ball B(k,l,m) in the boundary of the (d+1)-cube: both
/// facets of the first k coordinate pairs and the + facet of the next l.
struct KLMTriple {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t m = 0;

  std::size_t d() const { return k + l + m - 1; }
  std::string to_string() const;
  friend bool operator==(const KLMTriple&, const KLMTriple&) = default;
  friend auto operator<=>(const KLMTriple&, const KLMTriple&) = default;
};

/// Triples with k >= m >= 1, l >= 1, k + l + m = d + 1, ordered by
/// decreasing k then decreasing m.
std::vector<KLMTriple> valid_triples(std::size_t d);

/// The polytope conv(Q x 2Q u 2Q x Q), Q = [-1,1]^(d/2), with its facet
/// description (+-x_i <= 2; +-x_i +- x_j <= 3 for i <= d/2 < j). Vertices are
/// labeled by the (d+1)-cube they lift to: the signs of the d coordinates,
/// then - for the Q x 2Q part and + for the 2Q x Q part.
struct FirstConstruction {
  std::size_t d = 0;
  HPolytope h;
  VPolytope v;
};

/// Throws InputError for odd or nonpositive d.
FirstConstruction first_construction(std::size_t d);

/// Vertices of the facet description equal the listed points, and the
/// facets of the point set are exactly the listed inequalities.
bool first_construction_consistent(const FirstConstruction& fc);

/// The boundary complex of B(k,l,m): cube faces lying in a facet of the ball
/// and in a facet of its complement.
CubicalComplex pklm_sphere(const KLMTriple& t);

/// Membership test behind pklm_sphere, for a face of the (d+1)-cube.
bool in_pklm_sphere(const KLMTriple& t, const SignVector& face);

/// delta_i(k,l,m) = sum_j C(l, i-j) (C(k,j) + C(m,j)) 2^j. Any k, l, m >= 0.
std::int64_t pklm_delta(std::size_t i, std::size_t k, std::size_t l, std::size_t m);

/// f_{d+1-i} = C(d+1,i) 2^i - delta_i(k,l,m) for i = 2..d+1.
FVector pklm_fvector(const KLMTriple& t);

/// Triples with m >= floor(d/2): the ones whose sphere has the
/// (floor(d/2)-1)-skeleton of the (d+1)-cube.
std::vector<KLMTriple> neighborly_triples(std::size_t d);

struct UbcReport {
  std::size_t d = 0;
  std::size_t triples = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<KLMTriple> neighborly;
  FVector max_fvector;  // componentwise maximum over all triples
  bool neighborly_maximizes = false;
  bool ok() const { return failures.empty() && neighborly_maximizes; }
};

/// Verifies for all valid triples and all i in 0..d+1 the four delta
/// relations used to compare triples, and that the neighborly triples
/// minimize every delta_i (so maximize every f_i). Does not throw.
UbcReport ubc_polytope_report(std::size_t d);

/// ubc_polytope_report, throwing TheoremViolation on any failure.
UbcReport ubc_polytope_case(std::size_t d);

/// Two explicit 4-polytopes on 32 points with the graph of the 5-cube: one
/// cubical, one with a 12-vertex facet.
struct Q5GraphExamplesReport {
  // Cubical example.
  bool p_all_vertices = false;
  bool p_cube_facet = false;       // {x4 = 0} is a facet with 3-cube lattice
  bool p_q5_graph = false;
  bool p_cubical = false;
  FVector p_fvector;
  // Non-cubical example.
  bool q_all_vertices = false;
  bool q_q5_graph = false;
  bool q_one_big_facet = false;    // exactly one facet with 12 vertices, as listed
  bool q_cubical = true;
  bool q_double_cubical = false;   // all 2-faces quadrilaterals
  FVector q_fvector;
  bool ok() const;
};

VPolytope cubical_q5_example();
VPolytope noncubical_q5_example();

Q5GraphExamplesReport q5_graph_examples_report();

/// q5_graph_examples_report, throwing TranscriptionError on any failure.
Q5GraphExamplesReport verify_q5_graph_examples();

}  // namespace ncp
