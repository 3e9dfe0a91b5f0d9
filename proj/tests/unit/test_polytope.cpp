#include "ncp/deformed_cube.hpp"
#include "ncp/errors.hpp"
#include "ncp/hull.hpp"
#include "ncp/io.hpp"
#include "ncp/lattice.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>

using namespace ncp;

namespace {

HPolytope box(std::size_t dim, const Rational& lo, const Rational& hi) {
  HPolytope h;
  h.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector n(dim, Rational(0));
    n[i] = -1;
    h.inequalities.push_back({n, -lo});
    n[i] = 1;
    h.inequalities.push_back({n, hi});
  }
  return h;
}

VPolytope cube_points(std::size_t dim) {
  VPolytope v;
  v.dim = dim;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << dim); ++b) {
    Vector p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = (b >> k) & 1 ? 1 : -1;
    v.points.push_back(p);
  }
  return v;
}

std::vector<Edge> qn_edges(std::size_t n, const std::vector<std::uint32_t>& relabel) {
  std::vector<Edge> edges;
  for (std::uint32_t v = 0; v < (1u << n); ++v)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint32_t w = v ^ (1u << k);
      if (v < w) edges.emplace_back(std::min(relabel[v], relabel[w]), std::max(relabel[v], relabel[w]));
    }
  return edges;
}

// Backtracking search for an isomorphism onto Q_n; the reference the
// anchored-closure algorithm is checked against.
bool brute_force_iso(const std::vector<Edge>& edges, std::size_t vertices, std::size_t n) {
  if (vertices != (std::size_t{1} << n)) return false;
  std::vector<std::vector<bool>> adj(vertices, std::vector<bool>(vertices, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  if (edges.size() != n * vertices / 2) return false;
  std::vector<int> image(vertices, -1);
  std::vector<bool> used(vertices, false);
  auto cube_adj = [](std::uint32_t x, std::uint32_t y) { return std::popcount(x ^ y) == 1; };
  std::function<bool(std::size_t)> place = [&](std::size_t v) {
    if (v == vertices) return true;
    for (std::uint32_t x = 0; x < vertices; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = adj[u][v] == cube_adj(static_cast<std::uint32_t>(image[u]), x);
      if (!ok) continue;
      image[v] = static_cast<int>(x), used[x] = true;
      if (place(v + 1)) return true;
      used[x] = false;
    }
    image[v] = -1;
    return false;
  };
  return place(0);
}

bool valid_labeling(const std::vector<Edge>& edges, const std::vector<std::uint64_t>& labels, std::size_t n) {
  std::set<std::uint64_t> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size() || labels.size() != (std::size_t{1} << n)) return false;
  for (auto [a, b] : edges)
    if (std::popcount(labels[a] ^ labels[b]) != 1) return false;
  return edges.size() == n * labels.size() / 2;
}

}  // namespace

TEST(VertexEnumeration, UnitSquare) {
  const VPolytope v = vertices_from_hrep(box(2, 0, 1));
  EXPECT_EQ(v.points.size(), 4u);
  EXPECT_EQ(v.points.front(), (Vector{0, 0}));
}

TEST(VertexEnumeration, DeformedSquareHandSolved) {
  // eps = 1/4: (1/4)|x1| <= 1 gives |x1| = 4.
  const VPolytope v = vertices_from_hrep(build_deformed_cube(2, Rational(1, 4)));
  ASSERT_EQ(v.points.size(), 4u);
  for (const auto& p : v.points) EXPECT_EQ(abs(p[0]), 4);
}

TEST(VertexEnumeration, DegenerateInputsRaise) {
  HPolytope orthant;
  orthant.dim = 2;
  orthant.inequalities = {{{-1, 0}, 0}, {{0, -1}, 0}};
  EXPECT_THROW(vertices_from_hrep(orthant), UnboundedError);

  HPolytope halfplane = box(2, 0, 1);
  halfplane.inequalities.pop_back();
  EXPECT_THROW(vertices_from_hrep(halfplane), UnboundedError);

  HPolytope empty = box(2, 0, 1);
  empty.inequalities.push_back({{1, 1}, -1});
  EXPECT_THROW(vertices_from_hrep(empty), EmptyPolytopeError);
}

TEST(FacetEnumeration, ThreeCube) {
  const auto inc = facets_from_vrep(cube_points(3));
  ASSERT_EQ(inc.facet_count(), 6u);
  for (const auto& f : inc.facets) EXPECT_EQ(f.count(), 4u);
}

TEST(FacetEnumeration, FlatInputRaises) {
  VPolytope flat;
  flat.dim = 3;
  flat.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  EXPECT_THROW(facets_from_vrep(flat), SpanError);
}

TEST(FacetEnumeration, RecoversIrredundantInequalities) {
  HPolytope h = box(3, -1, 2);
  h.inequalities.push_back({{1, 1, 1}, 100});  // redundant
  const auto inc = facets_from_vrep(vertices_from_hrep(h));
  ASSERT_EQ(inc.facet_inequalities.size(), 6u);
  std::set<std::pair<Vector, Rational>> expected;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto c = canonical_form(h.inequalities[i]);
    expected.emplace(c.normal, c.rhs);
  }
  for (const auto& ineq : inc.facet_inequalities) EXPECT_TRUE(expected.contains({ineq.normal, ineq.rhs}));
}

TEST(FacetEnumeration, CrossPolytopeAndSimplex) {
  VPolytope cross;
  cross.dim = 3;
  for (std::size_t k = 0; k < 3; ++k)
    for (int s : {-1, 1}) {
      Vector p(3, Rational(0));
      p[k] = s;
      cross.points.push_back(p);
    }
  EXPECT_EQ(facets_from_vrep(cross).facet_count(), 8u);

  VPolytope simplex;
  simplex.dim = 3;
  simplex.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto inc = facets_from_vrep(simplex);
  EXPECT_EQ(inc.facet_count(), 4u);
  EXPECT_FALSE(is_cubical(face_lattice(inc)));
}

TEST(CanonicalForm, PrimitiveIntegerNormal) {
  const auto c = canonical_form({{Rational(2, 3), Rational(4, 3)}, 2});
  EXPECT_EQ(c.normal, (Vector{1, 2}));
  EXPECT_EQ(c.rhs, 3);
  EXPECT_THROW(canonical_form({{0, 0}, 1}), InputError);
}

TEST(FaceLattice, ThreeCube) {
  const auto inc = facets_from_vrep(cube_points(3));
  const auto lattice = face_lattice(inc);
  EXPECT_EQ(f_vector(lattice), (FVector{8, 12, 6}));
  EXPECT_EQ(f_vector(face_lattice(inc, cube_points(3).points)), (FVector{8, 12, 6}));
  EXPECT_EQ(f_vector(face_lattice(inc, 1)), (FVector{8, 12}));
  EXPECT_TRUE(is_cubical(lattice));
}

TEST(FaceLattice, ClosedUnderIntersection) {
  const auto lattice = face_lattice(facets_from_vrep(cube_points(4)));
  std::set<VertexSet> all;
  for (const auto& layer : lattice) all.insert(layer.begin(), layer.end());
  for (const auto& a : all)
    for (const auto& b : all) {
      const VertexSet c = a & b;
      if (!c.empty()) {
        EXPECT_TRUE(all.contains(c));
      }
    }
  EXPECT_EQ(f_vector(lattice), (FVector{16, 32, 24, 8}));
  EXPECT_TRUE(is_cubical(lattice));
}

TEST(Graph, ThreeCubeIsThreeRegular) {
  const auto edges = graph_of(facets_from_vrep(cube_points(3)));
  ASSERT_EQ(edges.size(), 12u);
  std::vector<int> degree(8, 0);
  for (auto [a, b] : edges) ++degree[a], ++degree[b];
  EXPECT_TRUE(std::all_of(degree.begin(), degree.end(), [](int x) { return x == 3; }));
}

TEST(HypercubeIso, Examples) {
  std::vector<std::uint32_t> id(8);
  std::iota(id.begin(), id.end(), 0u);
  const auto q3 = qn_edges(3, id);
  const auto labels = hypercube_graph_iso(q3, 8, 3);
  ASSERT_TRUE(labels.has_value());
  EXPECT_TRUE(valid_labeling(q3, *labels, 3));
  EXPECT_EQ(labels->front(), 0u);

  const std::vector<Edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_FALSE(hypercube_graph_iso(k4, 4, 2).has_value());
  EXPECT_FALSE(hypercube_graph_iso(q3, 8, 4).has_value());
}

TEST(HypercubeIso, MatchesBruteForceOnSmallGraphs) {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t vertices = std::size_t{1} << n;
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::uint32_t> perm(vertices);
      std::iota(perm.begin(), perm.end(), 0u);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto edges = qn_edges(n, perm);
      // Half the trials: a degree-preserving double edge swap.
      if (trial % 2 == 1 && edges.size() >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const std::size_t i = pick(rng), j = pick(rng);
        auto [a, b] = edges[i];
        auto [c, e] = edges[j];
        const Edge x{std::min(a, e), std::max(a, e)}, y{std::min(c, b), std::max(c, b)};
        const bool fresh = a != e && c != b && x != y &&
                           std::find(edges.begin(), edges.end(), x) == edges.end() &&
                           std::find(edges.begin(), edges.end(), y) == edges.end();
        if (i != j && fresh) {
          edges[i] = x;
          edges[j] = y;
        }
      }
      std::sort(edges.begin(), edges.end());
      const auto found = hypercube_graph_iso(edges, vertices, n);
      EXPECT_EQ(found.has_value(), brute_force_iso(edges, vertices, n)) << "n=" << n << " trial=" << trial;
      if (found) {
        EXPECT_TRUE(valid_labeling(edges, *found, n));
      }
    }
  }
}

TEST(Export, JsonUsesRationalStrings) {
  VPolytope v;
  v.dim = 1;
  v.points = {{Rational(-1, 2)}, {Rational(3)}};
  const std::string j = to_json(v);
  EXPECT_NE(j.find("\"-1/2\""), std::string::npos);
  EXPECT_NE(j.find("\"3\""), std::string::npos);
  EXPECT_EQ(j, to_json(v));
}

TEST(Export, OffForThreeCube) {
  const VPolytope v = cube_points(3);
  const std::string off = to_off(v, facets_from_vrep(v));
  EXPECT_EQ(off.rfind("OFF\n8 6 0\n", 0), 0u);
  EXPECT_THROW(to_off(cube_points(4), facets_from_vrep(cube_points(4))), DimensionError);
}
