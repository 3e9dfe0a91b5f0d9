#include "ncp/surgery.hpp"

#include "ncp/errors.hpp"
#include "ncp/gale.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ncp {

namespace {

constexpr std::size_t kN = 6;

SignVector sv(const char* text) { return SignVector::parse(text); }

// Flips the sign at `pos` of every entry (an edge stays an edge).
SignVector flipped(SignVector v, std::size_t pos) {
  v[pos] = negate(v[pos]);
  return v;
}

// Connected components of a graph given by adjacency lists.
bool is_connected(const std::vector<std::vector<std::size_t>>& adj) {
  if (adj.empty()) return true;
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == adj.size();
}

}  // namespace

SurgeryFacets surgery_facets() {
  SurgeryFacets s;
  s.a = sv("-+00+0");
  s.b = sv("-00++0");
  s.c = sv("--0+00");
  s.a_cap_b = *s.a.meet(s.b);
  s.b_cap_c = *s.b.meet(s.c);
  // X\Y: the face of X with the coordinate fixed by Y's meet flipped.
  s.a_minus_b = sv("-+0-+0");
  s.c_minus_b = sv("--0+-0");
  return s;
}

CubeCell cube_cell_of(const SignVector& face) {
  CubeCell cell;
  for (auto b : vertex_bits(face)) cell.corners.push_back(static_cast<std::uint32_t>(b));
  return cell;
}

std::vector<SignVector> c46_facets() {
  std::vector<SignVector> out;
  for (const auto& a : facets_gale(kN, 4)) out.push_back(to_sign_vector(a));
  return out;
}

CubicalComplex c46_complex() {
  const auto facets = c46_facets();
  return CubicalComplex::from_cube_faces(kN, facets);
}

Phi build_phi() {
  const auto s = surgery_facets();
  const auto facets = c46_facets();
  for (const auto& f : {s.a, s.b, s.c}) {
    if (!std::binary_search(facets.begin(), facets.end(), f)) {
      throw ConstructionError("facet " + f.to_string() + " missing from C_4^6");
    }
  }
  Phi phi;
  const std::vector<SignVector> abc{s.a, s.b, s.c};
  phi.ball = CubicalComplex::from_cube_faces(kN, abc);
  std::vector<SignVector> outer;
  for (const auto& top : abc) {
    for (const auto& g : cube_faces(kN, 2)) {
      if (!top.contains(g)) continue;
      const auto in = std::count_if(abc.begin(), abc.end(), [&](const SignVector& x) { return x.contains(g); });
      if (in == 1) outer.push_back(g);
    }
  }
  std::sort(outer.begin(), outer.end());
  outer.erase(std::unique(outer.begin(), outer.end()), outer.end());
  phi.boundary = CubicalComplex::from_cube_faces(kN, outer);
  return phi;
}

IntersectionLemmaReport intersection_lemma_report() {
  const auto s = surgery_facets();
  const Phi phi = build_phi();
  std::vector<VertexSet> boundary_faces;
  for (const auto& group : phi.boundary.faces()) boundary_faces.insert(boundary_faces.end(), group.begin(), group.end());

  IntersectionLemmaReport rep;
  const auto facets = c46_facets();
  for (const auto& f : facets) {
    if (f == s.a || f == s.b || f == s.c) continue;
    ++rep.facets_checked;
    const VertexSet fs = cube_face_set(f);
    std::vector<VertexSet> inside;
    for (const auto& g : boundary_faces)
      if (g.is_subset_of(fs)) inside.push_back(g);
    if (inside.empty()) continue;
    const auto top = *std::max_element(inside.begin(), inside.end(), [](const VertexSet& x, const VertexSet& y) {
      return x.count() < y.count();
    });
    const bool single = std::all_of(inside.begin(), inside.end(), [&](const VertexSet& g) { return g.is_subset_of(top); });
    // The meet of the facet with the boundary must also be exactly that face.
    VertexSet meet(fs.universe());
    for (const auto& g : inside) meet = meet | g;
    if (!single || meet != top) rep.violations.push_back(f);
  }

  const SignVector b_minus_a = s.b_cap_c;
  const SignVector b_minus_c = s.a_cap_b;
  const std::vector<std::pair<SignVector, SignVector>> pairs{
      {s.a_minus_b, b_minus_a}, {b_minus_c, s.c_minus_b}, {s.a_minus_b, s.c_minus_b}};
  rep.pairs_separated = true;
  for (const auto& f : facets) {
    const VertexSet fs = cube_face_set(f);
    for (const auto& [x, y] : pairs) {
      if (fs.intersects(cube_face_set(x)) && fs.intersects(cube_face_set(y))) rep.pairs_separated = false;
    }
  }
  return rep;
}

bool intersection_lemma_check() { return intersection_lemma_report().ok(); }

std::vector<std::pair<SignVector, std::size_t>> shared_edge_degrees() {
  const auto s = surgery_facets();
  const auto facets = c46_facets();
  std::vector<std::pair<SignVector, std::size_t>> out;
  for (const auto& square : {s.a_cap_b, s.b_cap_c}) {
    for (const auto& e : cube_faces(kN, 1)) {
      if (!square.contains(e)) continue;
      const auto deg = std::count_if(facets.begin(), facets.end(), [&](const SignVector& f) { return f.contains(e); });
      out.emplace_back(e, static_cast<std::size_t>(deg));
    }
  }
  return out;
}

SphereReport verify_sphere_like(const CubicalComplex& c) {
  SphereReport rep;
  const auto& faces = c.faces();
  const std::size_t D = c.dim();
  rep.dim = D;
  const auto& facets = c.facets();
  if (!c.is_pure()) rep.failures.push_back("complex is not pure");

  // (a) ridges
  std::unordered_map<VertexSet, std::vector<std::size_t>> ridge_facets;
  if (D >= 1) {
    for (const auto& r : faces[D - 1]) ridge_facets[r];
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (const auto& r : faces[D - 1])
        if (r.is_subset_of(facets[i])) ridge_facets[r].push_back(i);
  }
  rep.ridges_in_two_facets = D >= 1;
  for (const auto& [r, list] : ridge_facets) {
    if (list.size() != 2) {
      rep.ridges_in_two_facets = false;
      rep.failures.push_back("ridge of size " + std::to_string(r.count()) + " in " + std::to_string(list.size()) +
                             " facets");
      break;
    }
  }

  // (b) facet adjacency graph
  std::vector<std::vector<std::size_t>> adj(facets.size());
  for (const auto& [r, list] : ridge_facets)
    for (std::size_t x = 0; x < list.size(); ++x)
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        adj[list[x]].push_back(list[y]);
        adj[list[y]].push_back(list[x]);
      }
  rep.connected = is_connected(adj);
  if (!rep.connected) rep.failures.push_back("facet graph disconnected");

  // (c) Euler characteristic
  long chi = 0;
  for (std::size_t k = 0; k < faces.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(faces[k].size());
  rep.euler_characteristic = chi;
  rep.euler_ok = chi == 1 + (D % 2 == 0 ? 1 : -1);
  if (!rep.euler_ok) rep.failures.push_back("Euler characteristic " + std::to_string(chi));

  // (d) vertex links: simplices are the faces through v of dimension >= 1.
  rep.vertex_links_ok = D >= 1;
  const long link_chi = 1 + ((D - 1) % 2 == 0 ? 1 : -1);
  for (const auto& vset : faces[0]) {
    const auto v = vset.indices().front();
    long lchi = 0;
    for (std::size_t k = 1; k < faces.size(); ++k)
      for (const auto& f : faces[k])
        if (f.contains(v)) lchi += (k - 1) % 2 == 0 ? 1 : -1;
    std::vector<std::size_t> local;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (facets[i].contains(v)) local.push_back(i);
    std::unordered_map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < local.size(); ++i) pos[local[i]] = i;
    std::vector<std::vector<std::size_t>> ladj(local.size());
    bool closed = true;
    for (const auto& [r, list] : ridge_facets) {
      if (!r.contains(v)) continue;
      if (list.size() != 2) closed = false;
      if (list.size() == 2) {
        ladj[pos.at(list[0])].push_back(pos.at(list[1]));
        ladj[pos.at(list[1])].push_back(pos.at(list[0]));
      }
    }
    if (!closed || !is_connected(ladj) || lchi != link_chi) {
      rep.vertex_links_ok = false;
      rep.failures.push_back("bad link at vertex " + std::to_string(v));
      break;
    }
  }
  return rep;
}

Psi build_psi() {
  const auto s = surgery_facets();
  if (!intersection_lemma_check()) throw ConstructionError("intersection lemma fails; surgery not admissible");
  const auto facets = c46_facets();

  Psi psi;
  // Central cube: local bits (pos 3, pos 6, top). Top is A\B, bottom C\B.
  {
    CubeCell central;
    const auto top = cube_cell_of(s.a_minus_b).corners;
    const auto bottom = cube_cell_of(s.c_minus_b).corners;
    central.corners.insert(central.corners.end(), bottom.begin(), bottom.end());
    central.corners.insert(central.corners.end(), top.begin(), top.end());
    psi.new_cells.push_back(std::move(central));
    for (std::size_t i = 0; i < top.size(); ++i) psi.new_edges.emplace_back(std::min(top[i], bottom[i]), std::max(top[i], bottom[i]));
    std::sort(psi.new_edges.begin(), psi.new_edges.end());
  }
  // Side cubes: for each edge e of A\B the rungs e, e with position 4
  // flipped (in A cap B), then position 2 (in B cap C), then position 5 (in
  // C\B) form a square of edges; the cube is that square times the edge.
  for (const auto& e : cube_faces(kN, 1)) {
    if (!s.a_minus_b.contains(e)) continue;
    const SignVector e_ab = flipped(e, 3);
    const SignVector e_bc = flipped(e_ab, 1);
    const SignVector e_c = flipped(e_bc, 4);
    // Corners (x, y): e = (0,0), e_ab = (1,0), e_bc = (1,1), e_c = (0,1).
    const std::array<const SignVector*, 4> rung{&e, &e_ab, &e_c, &e_bc};
    CubeCell cell;
    cell.corners.resize(8);
    for (std::size_t xy = 0; xy < 4; ++xy) {
      const auto ends = vertex_bits(*rung[xy]);
      for (std::size_t t = 0; t < 2; ++t) cell.corners[xy | (t << 2)] = static_cast<std::uint32_t>(ends[t]);
    }
    psi.new_cells.push_back(std::move(cell));
  }

  std::vector<CubeCell> cells;
  for (const auto& f : facets)
    if (f != s.a && f != s.b && f != s.c) cells.push_back(cube_cell_of(f));
  cells.insert(cells.end(), psi.new_cells.begin(), psi.new_cells.end());
  psi.sphere = CubicalComplex::from_cells(std::size_t{1} << kN, cells);

  if (!psi.sphere.is_cubical() || !psi.sphere.is_pure() || !psi.sphere.is_closed_under_intersection()) {
    throw ConstructionError("glued complex is not a pure intersection-closed cubical complex");
  }
  if (!verify_sphere_like(psi.sphere).ridges_in_two_facets) {
    throw ConstructionError("glued complex is not a pseudomanifold");
  }
  return psi;
}

}  // namespace ncp
