#include "ncp/errors.hpp"
#include "ncp/gale.hpp"
#include "ncp/skeleton.hpp"
#include "ncp/surgery.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

using namespace ncp;

TEST(Surgery, NamedFacesAreFacets) {
  const auto s = surgery_facets();
  const auto facets = c46_facets();
  EXPECT_EQ(facets.size(), 64u);
  for (const auto& f : {s.a, s.b, s.c}) EXPECT_TRUE(std::binary_search(facets.begin(), facets.end(), f));
  EXPECT_EQ(s.a_cap_b.zero_count(), 2u);
  EXPECT_EQ(s.b_cap_c.zero_count(), 2u);
  EXPECT_TRUE(s.a.contains(s.a_minus_b));
  EXPECT_TRUE(s.c.contains(s.c_minus_b));
  EXPECT_FALSE(s.a_minus_b.meet(s.a_cap_b).has_value());
}

TEST(Surgery, CubeCellCorners) {
  const auto cell = cube_cell_of(SignVector::parse("-0+0"));
  EXPECT_EQ(cell.dim(), 2u);
  // Coordinates 0 and 2 fixed at - and +; 1 and 3 free.
  EXPECT_EQ(cell.corners, (std::vector<std::uint32_t>{4, 6, 12, 14}));
}

TEST(Surgery, ComplexMatchesCriterion) {
  const auto c = c46_complex();
  EXPECT_EQ(c.f_vector(), (FVector{64, 192, 192, 64}));
  EXPECT_TRUE(c.is_cubical());
  EXPECT_TRUE(verify_sphere_like(c).ok());
}

TEST(Phi, BallAndBoundary) {
  const Phi phi = build_phi();
  EXPECT_EQ(phi.ball.f_vector()[0], 16);
  EXPECT_EQ(phi.ball.facets().size(), 3u);
  EXPECT_EQ(phi.boundary.f_vector(), (FVector{16, 28, 14}));
  EXPECT_TRUE(verify_sphere_like(phi.boundary).ok());
  const auto ball = verify_sphere_like(phi.ball);
  EXPECT_FALSE(ball.ridges_in_two_facets);
  EXPECT_FALSE(ball.ok());
}

TEST(IntersectionLemma, AllOtherFacets) {
  const auto rep = intersection_lemma_report();
  EXPECT_EQ(rep.facets_checked, 61u);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_TRUE(rep.pairs_separated);
  EXPECT_TRUE(intersection_lemma_check());
}

TEST(EdgeDegrees, AtLeastFourHalfFive) {
  const auto degrees = shared_edge_degrees();
  ASSERT_EQ(degrees.size(), 8u);
  std::size_t fives = 0;
  for (const auto& [edge, deg] : degrees) {
    EXPECT_EQ(edge.zero_count(), 1u);
    EXPECT_GE(deg, 4u) << edge.to_string();
    fives += deg == 5;
  }
  EXPECT_EQ(fives, 4u);
}

TEST(Psi, FVectorAndSphere) {
  const Psi psi = build_psi();
  const FVector before = c46_complex().f_vector();
  const FVector after = psi.sphere.f_vector();
  EXPECT_EQ(after, (FVector{64, 196, 198, 66}));
  FVector diff;
  for (std::size_t i = 0; i < after.size(); ++i) diff.push_back(after[i] - before[i]);
  EXPECT_EQ(diff, (FVector{0, 4, 6, 2}));
  EXPECT_EQ(psi.new_cells.size(), 5u);
  EXPECT_EQ(psi.new_edges.size(), 4u);
  EXPECT_TRUE(psi.sphere.is_cubical());
  EXPECT_TRUE(psi.sphere.is_closed_under_intersection());
  const auto rep = verify_sphere_like(psi.sphere);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.euler_characteristic, 0);
  EXPECT_TRUE(dehn_sommerville_check(after, 4));
  EXPECT_GT(after.back(), f_formula(6, 4));
}

TEST(Psi, KeepsTheOneSkeleton) {
  // New edges join vertices that were not adjacent in the cube.
  const Psi psi = build_psi();
  for (auto [a, b] : psi.new_edges) EXPECT_GT(std::popcount(a ^ b), 1);
  const auto before = c46_complex();
  for (const auto& e : before.faces()[1]) EXPECT_TRUE(psi.sphere.contains(e));
}
