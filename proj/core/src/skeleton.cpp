#include "ncp/skeleton.hpp"

#include "ncp/deformed_cube.hpp"
#include "ncp/errors.hpp"
#include "ncp/gale.hpp"
#include "ncp/hull.hpp"
#include "ncp/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace ncp {

namespace {

// Face of the cube spanned by a set of labels, if they form one.
std::optional<SignVector> spanned_face(const VertexSet& vertices, std::span<const SignVector> labels) {
  const auto idx = vertices.indices();
  if (idx.empty()) return std::nullopt;
  const std::size_t n = labels[idx.front()].size();
  SignVector face = labels[idx.front()];
  for (auto i : idx)
    for (std::size_t k = 0; k < n; ++k)
      if (labels[i][k] != face[k]) face[k] = Sign::Zero;
  if (idx.size() != (std::size_t{1} << face.zero_count())) return std::nullopt;
  return face;
}

}  // namespace

std::vector<SignVector> facets_as_cube_faces(const IncidenceStructure& inc,
                                             std::span<const SignVector> labels) {
  if (labels.size() != inc.vertex_count) throw InputError("facets_as_cube_faces: one label per vertex");
  std::vector<SignVector> out;
  for (const auto& f : inc.facets) {
    const auto face = spanned_face(f, labels);
    if (!face) throw ConstructionError("oracle facet is not a cube face");
    out.push_back(*face);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVector> cube_skeleton(std::size_t n, std::size_t r) {
  std::vector<SignVector> out;
  for (std::size_t k = 0; k <= std::min(r, n); ++k) {
    auto part = cube_faces(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool verify_skeleton_equivalence(const FaceLattice& lattice, std::span<const SignVector> labels,
                                 std::size_t r) {
  if (labels.empty()) throw InputError("skeleton check needs vertex labels");
  const std::size_t n = labels.front().size();
  if (n >= 63) throw InputError("skeleton check: n too large");
  std::map<std::uint64_t, std::uint32_t> index_of;
  for (std::uint32_t i = 0; i < labels.size(); ++i) {
    if (labels[i].size() != n || !labels[i].is_vertex()) throw InputError("labels must lie in {+-}^n");
    index_of.emplace(labels[i].bits(), i);
  }
  if (index_of.size() != labels.size()) throw InputError("labels must be distinct");
  if (labels.size() != (std::size_t{1} << n)) return false;

  for (std::size_t k = 0; k <= r; ++k) {
    const auto cube = cube_faces(n, k);
    if (k >= lattice.size()) return cube.empty();
    if (lattice[k].size() != cube.size()) return false;
    std::unordered_set<VertexSet> present(lattice[k].begin(), lattice[k].end());
    for (const auto& face : cube) {
      VertexSet s(labels.size());
      for (auto b : vertex_bits(face)) s.insert(index_of.at(b));
      if (!present.contains(s)) return false;
    }
  }
  return true;
}

bool verify_skeleton_equivalence(const IncidenceStructure& inc, std::span<const SignVector> labels,
                                 std::size_t r) {
  if (labels.size() != inc.vertex_count) throw InputError("skeleton check: one label per vertex");
  return verify_skeleton_equivalence(face_lattice(inc, static_cast<int>(r)), labels, r);
}

bool dehn_sommerville_check(const FVector& f, std::size_t d) {
  if (f.size() != d) return false;
  for (std::size_t k = 0; k + 2 <= d; ++k) {
    Integer lhs = 0;
    for (std::size_t i = k; i < d; ++i) {
      Integer term = Integer(binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(k)));
      term *= Integer(1) << static_cast<mp_bitcnt_t>(i - k);
      term *= Integer(static_cast<long>(f[i]));
      lhs += i % 2 == 0 ? term : Integer(-term);
    }
    const Integer rhs = (d - 1) % 2 == 0 ? Integer(static_cast<long>(f[k])) : Integer(-static_cast<long>(f[k]));
    if (lhs != rhs) return false;
  }
  return true;
}

std::optional<FVector> dehn_sommerville_complete(const FVector& known, std::size_t d) {
  const std::size_t m = known.size();
  if (m > d) return std::nullopt;
  const std::size_t unknowns = d - m;
  if (unknowns == 0) return dehn_sommerville_check(known, d) ? std::optional(known) : std::nullopt;
  // Rows: one per equation; columns: unknowns then the constant.
  std::vector<Vector> rows;
  for (std::size_t k = 0; k + 2 <= d; ++k) {
    Vector row(unknowns + 1, Rational(0));
    for (std::size_t i = k; i < d; ++i) {
      Rational c = binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(k));
      c *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(i - k));
      if (i % 2 == 1) c = -c;
      if (i == k) c -= (d - 1) % 2 == 0 ? 1 : -1;
      if (i < m) {
        row[unknowns] -= c * static_cast<long>(known[i]);
      } else {
        row[i - m] += c;
      }
    }
    rows.push_back(std::move(row));
  }
  // Gauss-Jordan.
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= unknowns; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < unknowns) return std::nullopt;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][unknowns] != 0) return std::nullopt;
  FVector out = known;
  for (std::size_t i = 0; i < unknowns; ++i) {
    const Rational& v = rows[i][unknowns];
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
    out.push_back(v.get_num().get_si());
  }
  return out;
}

bool double_r_cubicality_check(const FaceLattice& lattice, std::size_t r, std::size_t d) {
  const std::size_t top = d == 0 ? 0 : std::min(2 * r, d - 1);
  for (std::size_t k = 0; k <= top && k < lattice.size(); ++k)
    for (const auto& f : lattice[k])
      if (f.count() != (std::size_t{1} << k)) return false;
  return true;
}

UpperSubdivision upper_face_subdivision(std::size_t n, std::size_t d) {
  if (d < 2 || n < d + 1) throw InputError("upper_face_subdivision needs n >= d+1 >= 3");
  UpperSubdivision out;
  out.n = n;
  out.d = d;
  Rational eps(1, 2);
  for (int step = 0;; ++step, eps /= 2) {
    if (step == 128) throw ConstructionError("no epsilon certified for both dimensions");
    if (certify_epsilon(n, d, eps) && certify_epsilon(n, d + 1, eps)) break;
  }
  out.epsilon = eps;

  const VPolytope cube = deformed_cube_vertices(n, eps);
  const VPolytope high = project_last(cube, d + 1);
  const VPolytope low = project_last(cube, d);
  const IncidenceStructure high_inc = facets_from_vrep(high);
  const IncidenceStructure low_inc = facets_from_vrep(low);

  for (std::size_t f = 0; f < high_inc.facets.size(); ++f) {
    if (sign(high_inc.facet_inequalities[f].normal.front()) <= 0) continue;
    const auto face = spanned_face(high_inc.facets[f], cube.labels);
    if (!face || face->zero_count() != d) throw ConstructionError("upper facet is not a d-face of the cube");
    std::vector<Vector> pts;
    for (auto i : high_inc.facets[f].indices()) pts.push_back(low.points[i]);
    if (affine_dimension(pts) != static_cast<int>(d)) throw ConstructionError("upper facet projects degenerately");
    out.tiles.push_back(*face);
  }
  std::sort(out.tiles.begin(), out.tiles.end());
  out.boundary = facets_as_cube_faces(low_inc, cube.labels);
  out.complex = CubicalComplex::from_cube_faces(n, out.tiles);

  VertexSet covered(cube.points.size());
  for (const auto& t : out.tiles) covered = covered | cube_face_set(t);
  out.covers_vertices = covered.count() == cube.points.size();

  // (d-1)-cells: subfaces of tiles with d-1 zeroes, counted by tile.
  std::map<SignVector, std::size_t> ridge_count;
  for (const auto& t : out.tiles) {
    for (std::size_t k = 0; k < n; ++k) {
      if (t[k] != Sign::Zero) continue;
      for (Sign s : {Sign::Minus, Sign::Plus}) {
        SignVector g = t;
        g[k] = s;
        ++ridge_count[g];
      }
    }
  }
  std::vector<SignVector> single;
  out.interior_cells_shared = true;
  for (const auto& [g, c] : ridge_count) {
    if (c == 1) single.push_back(g);
    else if (c != 2) out.interior_cells_shared = false;
  }
  out.boundary_matches = single == out.boundary;
  if (!out.covers_vertices || !out.boundary_matches || !out.interior_cells_shared) {
    throw ConstructionError("upper facets do not tile the projection");
  }

  out.checked_dim = d / 2 - 1;
  const auto& lattice = out.complex.faces();
  std::vector<VertexSet> boundary_sets;
  for (const auto& b : out.boundary) boundary_sets.push_back(cube_face_set(b));
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    for (const auto& f : lattice[k]) {
      const bool on_boundary = std::any_of(boundary_sets.begin(), boundary_sets.end(),
                                           [&](const VertexSet& b) { return f.is_subset_of(b); });
      if (on_boundary) continue;
      if (!out.lowest_interior_dim || k < *out.lowest_interior_dim) out.lowest_interior_dim = k;
      if (k <= out.checked_dim) out.interior_faces.push_back(*cube_face_of(f, n));
    }
  }
  std::sort(out.interior_faces.begin(), out.interior_faces.end());
  return out;
}

NeighborlyReport verify_neighborly(std::size_t n, std::size_t d, std::optional<std::size_t> r,
                                   std::optional<Rational> epsilon, bool oracle) {
  if (d < 2 || n < d) throw InputError("verify needs n >= d >= 2");
  NeighborlyReport rep;
  rep.n = n;
  rep.d = d;
  rep.r = r.value_or(d / 2 - 1);
  auto fail = [&](std::string what) { rep.failures.push_back(std::move(what)); };

  rep.epsilon = epsilon ? *epsilon : choose_epsilon(n, d);
  rep.epsilon_certified = certify_epsilon(n, d, rep.epsilon);
  if (!rep.epsilon_certified) fail("epsilon not certified");

  std::vector<SignVector> gale;
  for (const auto& a : facets_gale(n, d)) gale.push_back(to_sign_vector(a));
  std::sort(gale.begin(), gale.end());
  rep.gale_count = static_cast<std::int64_t>(gale.size());
  rep.formula_count = f_formula(n, d);
  if (rep.gale_count != rep.formula_count) fail("facet count differs from formula");

  FaceLattice lattice;
  std::vector<SignVector> labels;
  if (oracle) {
    const VPolytope v = projected_cube(n, d, rep.epsilon);
    const IncidenceStructure inc = facets_from_vrep(v);
    rep.oracle_run = true;
    try {
      rep.oracle_matches_gale = facets_as_cube_faces(inc, v.labels) == gale;
    } catch (const ConstructionError&) {
      rep.oracle_matches_gale = false;
    }
    if (!rep.oracle_matches_gale) fail("oracle facets differ from criterion");
    lattice = face_lattice(inc);
    labels = v.labels;
  } else {
    lattice = CubicalComplex::from_cube_faces(n, gale).faces();
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) labels.push_back(SignVector::from_bits(n, i));
  }
  rep.f_vector = f_vector(lattice);

  rep.cubical = is_cubical(lattice);
  if (!rep.cubical) fail("not cubical");
  rep.skeleton_at_r = verify_skeleton_equivalence(lattice, labels, rep.r);
  if (!rep.skeleton_at_r) fail("skeleton differs at r");
  if (n > d) {
    rep.skeleton_above_bound = verify_skeleton_equivalence(lattice, labels, d / 2);
    if (*rep.skeleton_above_bound) fail("skeleton agrees beyond floor(d/2)-1");
  }
  if (d >= 4) {
    rep.cube_graph = hypercube_graph_iso(graph_of(lattice), labels.size(), n).has_value();
    if (!*rep.cube_graph) fail("graph is not the n-cube graph");
  }
  rep.dehn_sommerville = dehn_sommerville_check(rep.f_vector, d);
  if (!rep.dehn_sommerville) fail("Dehn-Sommerville equations fail");
  if (d % 2 == 0) {
    const FVector known(rep.f_vector.begin(), rep.f_vector.begin() + static_cast<std::ptrdiff_t>(d / 2));
    const auto full = dehn_sommerville_complete(known, d);
    rep.ds_determines_facets = full && full->back() == rep.formula_count;
    if (!*rep.ds_determines_facets) fail("Dehn-Sommerville completion misses the facet count");
  }
  return rep;
}

}  // namespace ncp
