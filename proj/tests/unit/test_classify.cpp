#include "ncp/classify.hpp"
#include "ncp/errors.hpp"
#include "ncp/hull.hpp"
#include "ncp/lattice.hpp"
#include "ncp/skeleton.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace ncp;

namespace {

std::int64_t pow2(std::size_t k) { return std::int64_t{1} << k; }

// Counts the faces of the (d+1)-cube lying in the sphere directly, face by
// face over all 3^(d+1) sign vectors, without going through a complex.
FVector count_sphere_faces(const KLMTriple& t) {
  const std::size_t n = t.k + t.l + t.m;
  FVector f(n - 1, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    SignVector s(n);
    std::size_t c = code, dim = 0;
    for (std::size_t k = 0; k < n; ++k, c /= 3) {
      s[k] = static_cast<Sign>(static_cast<int>(c % 3) - 1);
      dim += s[k] == Sign::Zero;
    }
    if (dim < n - 1 && in_pklm_sphere(t, s)) ++f[dim];
  }
  return f;
}

}  // namespace

TEST(Triples, Count) {
  for (std::size_t d = 1; d <= 20; ++d) EXPECT_EQ(valid_triples(d).size(), d * d / 4) << d;
}

TEST(Triples, Constraints) {
  for (std::size_t d = 2; d <= 12; ++d)
    for (const auto& t : valid_triples(d)) {
      EXPECT_GE(t.k, t.m);
      EXPECT_GE(t.m, 1u);
      EXPECT_GE(t.l, 1u);
      EXPECT_EQ(t.d(), d);
    }
}

TEST(Triples, Neighborly) {
  EXPECT_EQ(neighborly_triples(4), (std::vector<KLMTriple>{{2, 1, 2}}));
  EXPECT_EQ(neighborly_triples(5), (std::vector<KLMTriple>{{3, 1, 2}, {2, 2, 2}}));
  EXPECT_EQ(neighborly_triples(6), (std::vector<KLMTriple>{{3, 1, 3}}));
  for (std::size_t d = 4; d <= 10; ++d) EXPECT_EQ(neighborly_triples(d).size(), d % 2 == 0 ? 1u : 2u) << d;
}

TEST(Delta, Examples) {
  // C(1,2)(...) + C(1,1)(2+2)*2 + C(1,0)(1+1)*4
  EXPECT_EQ(pklm_delta(2, 2, 1, 2), 0 + 8 + 8);
  EXPECT_EQ(pklm_fvector({2, 1, 2}), (FVector{32, 80, 72, 24}));
}

TEST(Delta, FVectorMatchesDirectCount) {
  for (std::size_t d = 2; d <= 5; ++d)
    for (const auto& t : valid_triples(d)) {
      const auto direct = count_sphere_faces(t);
      EXPECT_EQ(pklm_fvector(t), direct) << t.to_string();
      EXPECT_EQ(pklm_sphere(t).f_vector(), direct) << t.to_string();
      EXPECT_EQ(pklm_fvector({t.m, t.l, t.k}), direct) << t.to_string();
    }
}

TEST(Delta, MissingBlockDropsVertices) {
  // m = 0: a vertex needs a minus sign among the l middle coordinates.
  const KLMTriple t{3, 2, 0};
  EXPECT_LT(count_sphere_faces(t)[0], pow2(t.d() + 1));
  EXPECT_EQ(pklm_fvector({2, 1, 2})[0], pow2(5));
}

TEST(Ubc, NeighborlyFacetCount) {
  for (std::size_t d = 4; d <= 10; ++d) {
    const auto dd = static_cast<std::int64_t>(d);
    for (const auto& t : neighborly_triples(d)) EXPECT_EQ(pklm_fvector(t).back(), dd * dd + dd + 2 * (dd / 2)) << d;
  }
  EXPECT_EQ(pklm_fvector({3, 1, 2}).back(), 34);
}

TEST(Ubc, HoldsForSmallDimensions) {
  for (std::size_t d = 4; d <= 12; ++d) {
    const auto rep = ubc_polytope_report(d);
    EXPECT_TRUE(rep.ok()) << d;
    EXPECT_EQ(rep.triples, d * d / 4);
    EXPECT_NO_THROW(ubc_polytope_case(d));
  }
  const auto rep = ubc_polytope_report(5);
  EXPECT_EQ(rep.max_fvector, (FVector{64, 192, 232, 136, 34}));
}

TEST(FirstConstruction, FourDimensional) {
  const auto fc = first_construction(4);
  EXPECT_EQ(fc.v.points.size(), 32u);
  EXPECT_EQ(fc.h.inequalities.size(), 24u);
  EXPECT_TRUE(first_construction_consistent(fc));
  const auto inc = facets_from_vrep(fc.v);
  EXPECT_EQ(inc.facet_count(), 24u);
  EXPECT_TRUE(is_cubical(face_lattice(inc)));
  EXPECT_TRUE(verify_skeleton_equivalence(inc, fc.v.labels, 1));
  EXPECT_FALSE(verify_skeleton_equivalence(inc, fc.v.labels, 2));
}

TEST(FirstConstruction, Polygon) {
  const auto fc = first_construction(2);
  EXPECT_EQ(fc.v.points.size(), 8u);
  EXPECT_EQ(facets_from_vrep(fc.v).facet_count(), 8u);
  EXPECT_TRUE(first_construction_consistent(fc));
}

TEST(FirstConstruction, OddDimensionRejected) {
  EXPECT_THROW(first_construction(5), InputError);
  EXPECT_THROW(first_construction(0), InputError);
}

TEST(Q5Graph, CubicalExample) {
  const auto rep = q5_graph_examples_report();
  EXPECT_TRUE(rep.p_all_vertices);
  EXPECT_TRUE(rep.p_cube_facet);
  EXPECT_TRUE(rep.p_q5_graph);
  EXPECT_TRUE(rep.p_cubical);
  EXPECT_EQ(rep.p_fvector, (FVector{32, 80, 72, 24}));
}

TEST(Q5Graph, NonCubicalExampleAsListed) {
  // The listed coordinates put 12 of the 32 points off the vertex set; the
  // hull has 20 vertices and still one facet with 12 vertices.
  const auto inc = facets_from_vrep(noncubical_q5_example());
  const auto lattice = face_lattice(inc);
  EXPECT_EQ(lattice[0].size(), 20u);
  const auto big = std::count_if(inc.facets.begin(), inc.facets.end(), [](const VertexSet& f) { return f.count() == 12; });
  EXPECT_EQ(big, 1);
  const auto rep = q5_graph_examples_report();
  EXPECT_FALSE(rep.q_all_vertices);
  EXPECT_TRUE(rep.q_one_big_facet);
  EXPECT_FALSE(rep.ok());
  EXPECT_THROW(verify_q5_graph_examples(), TranscriptionError);
}
