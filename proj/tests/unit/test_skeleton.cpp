#include "ncp/deformed_cube.hpp"
#include "ncp/errors.hpp"
#include "ncp/gale.hpp"
#include "ncp/hull.hpp"
#include "ncp/lattice.hpp"
#include "ncp/skeleton.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ncp;

namespace {

std::int64_t cube_face_count(std::size_t n, std::size_t k) {
  return binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)) * (std::int64_t{1} << (n - k));
}

VPolytope labeled_cube(std::size_t n) {
  VPolytope v;
  v.dim = n;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    Vector p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = (b >> k) & 1 ? 1 : -1;
    v.points.push_back(p);
    v.labels.push_back(SignVector::from_bits(n, b));
  }
  return v;
}

}  // namespace

TEST(CubeSkeleton, Counts) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      std::int64_t expected = 0;
      for (std::size_t k = 0; k <= r; ++k) expected += cube_face_count(n, k);
      const auto faces = cube_skeleton(n, r);
      EXPECT_EQ(static_cast<std::int64_t>(faces.size()), expected);
      EXPECT_EQ(std::set<SignVector>(faces.begin(), faces.end()).size(), faces.size());
    }
}

TEST(SkeletonEquivalence, CubeItself) {
  const VPolytope v = labeled_cube(4);
  const auto inc = facets_from_vrep(v);
  for (std::size_t r = 0; r <= 3; ++r) EXPECT_TRUE(verify_skeleton_equivalence(inc, v.labels, r));
}

TEST(SkeletonEquivalence, SixCubeInFourSpace) {
  const VPolytope v = projected_cube(6, 4, choose_epsilon(6, 4));
  const auto inc = facets_from_vrep(v);
  EXPECT_TRUE(verify_skeleton_equivalence(inc, v.labels, 1));
  EXPECT_FALSE(verify_skeleton_equivalence(inc, v.labels, 2));
  const auto lattice = face_lattice(inc);
  EXPECT_TRUE(verify_skeleton_equivalence(lattice, v.labels, 1));
  const std::vector<SignVector> short_labels(v.labels.begin(), v.labels.end() - 1);
  EXPECT_THROW(verify_skeleton_equivalence(inc, short_labels, 1), InputError);
}

TEST(SkeletonEquivalence, FacetsReadAsCubeFaces) {
  const VPolytope v = projected_cube(6, 4, choose_epsilon(6, 4));
  const auto faces = facets_as_cube_faces(facets_from_vrep(v), v.labels);
  std::vector<SignVector> gale;
  for (const auto& a : facets_gale(6, 4)) gale.push_back(to_sign_vector(a));
  EXPECT_EQ(faces, gale);
}

TEST(DehnSommerville, Examples) {
  EXPECT_TRUE(dehn_sommerville_check({8, 12, 6}, 3));
  EXPECT_TRUE(dehn_sommerville_check({16, 32, 24, 8}, 4));
  EXPECT_TRUE(dehn_sommerville_check({64, 192, 192, 64}, 4));
  EXPECT_TRUE(dehn_sommerville_check({64, 196, 198, 66}, 4));
  EXPECT_FALSE(dehn_sommerville_check({64, 192, 192, 65}, 4));
  // Simplicial boundary of the tetrahedron is not cubical.
  EXPECT_FALSE(dehn_sommerville_check({4, 6, 4}, 3));
}

TEST(DehnSommerville, CompletionGivesFacetCount) {
  for (std::size_t d = 2; d <= 8; d += 2)
    for (std::size_t n = d; n <= d + 4; ++n) {
      FVector known;
      for (std::size_t k = 0; k < d / 2; ++k) known.push_back(cube_face_count(n, k));
      const auto full = dehn_sommerville_complete(known, d);
      ASSERT_TRUE(full.has_value()) << n << "," << d;
      EXPECT_EQ(full->back(), f_formula(n, d)) << n << "," << d;
      EXPECT_TRUE(dehn_sommerville_check(*full, d));
    }
}

TEST(DehnSommerville, UnderdeterminedIsEmpty) {
  EXPECT_FALSE(dehn_sommerville_complete({64}, 4).has_value());
}

TEST(DoubleR, SixCubeInFourSpace) {
  const auto lattice = face_lattice(facets_from_vrep(projected_cube(6, 4, choose_epsilon(6, 4))));
  EXPECT_TRUE(double_r_cubicality_check(lattice, 1, 4));
  EXPECT_TRUE(double_r_cubicality_check(lattice, 2, 4));
}

TEST(UpperSubdivision, TilesProjection) {
  const auto a = upper_face_subdivision(5, 4);
  EXPECT_TRUE(a.covers_vertices);
  EXPECT_TRUE(a.boundary_matches);
  EXPECT_TRUE(a.interior_cells_shared);
  EXPECT_EQ(a.checked_dim, 1u);
  EXPECT_TRUE(a.interior_faces.empty());
  EXPECT_EQ(a.tiles.size(), 5u);

  const auto b = upper_face_subdivision(6, 4);
  EXPECT_TRUE(b.interior_faces.empty());
  EXPECT_EQ(b.tiles.size(), 17u);
  for (const auto& t : b.tiles) EXPECT_EQ(t.zero_count(), 4u);
  EXPECT_THROW(upper_face_subdivision(4, 4), InputError);
}

TEST(VerifyNeighborly, Grid) {
  const std::vector<std::pair<std::size_t, std::size_t>> cases{{4, 2}, {5, 2}, {4, 3}, {5, 3}, {5, 4}, {6, 4}, {6, 5}};
  for (auto [n, d] : cases) {
    const auto rep = verify_neighborly(n, d);
    EXPECT_TRUE(rep.ok()) << n << "," << d << ": " << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.gale_count, f_formula(n, d));
    EXPECT_TRUE(rep.oracle_matches_gale);
    EXPECT_EQ(rep.skeleton_above_bound.has_value(), n > d);
    if (rep.skeleton_above_bound) {
      EXPECT_FALSE(*rep.skeleton_above_bound);
    }
  }
}

TEST(VerifyNeighborly, WithoutOracle) {
  const auto rep = verify_neighborly(8, 4, {}, {}, false);
  EXPECT_FALSE(rep.oracle_run);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.f_vector.back(), 6 * 64);
  for (std::size_t d = 5; d <= 7; ++d) EXPECT_TRUE(verify_neighborly(7, d, {}, {}, false).ok()) << d;
  EXPECT_THROW(verify_neighborly(3, 4), InputError);
}
