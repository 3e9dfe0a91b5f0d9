#include "ncp/lattice.hpp"

#include "ncp/errors.hpp"
#include "ncp/hull.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace ncp {

namespace {

std::vector<VertexSet> intersection_closure(const IncidenceStructure& inc) {
  std::unordered_set<VertexSet> seen(inc.facets.begin(), inc.facets.end());
  std::deque<VertexSet> queue(inc.facets.begin(), inc.facets.end());
  std::vector<VertexSet> faces(inc.facets.begin(), inc.facets.end());
  while (!queue.empty()) {
    const VertexSet face = std::move(queue.front());
    queue.pop_front();
    for (const auto& facet : inc.facets) {
      VertexSet meet = face & facet;
      if (meet.empty() || meet == face) continue;
      if (seen.insert(meet).second) {
        faces.push_back(meet);
        queue.push_back(std::move(meet));
      }
    }
  }
  std::sort(faces.begin(), faces.end(), canonical_less);
  return faces;
}

// Longest chain below each face; faces are sorted by size so every proper
// subface precedes its superfaces.
std::vector<int> chain_dimensions(const std::vector<VertexSet>& faces) {
  std::vector<int> dim(faces.size(), 0);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    int best = -1;
    for (std::size_t j = 0; j < i; ++j) {
      if (faces[j].count() < faces[i].count() && faces[j].is_subset_of(faces[i])) {
        best = std::max(best, dim[j]);
      }
    }
    dim[i] = best + 1;
  }
  return dim;
}

FaceLattice group(const std::vector<VertexSet>& faces, const std::vector<int>& dim, int up_to_dim) {
  int top = 0;
  for (int x : dim) top = std::max(top, x);
  if (up_to_dim >= 0) top = std::min(top, up_to_dim);
  FaceLattice lattice(static_cast<std::size_t>(top) + 1);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (dim[i] <= top) lattice[static_cast<std::size_t>(dim[i])].push_back(faces[i]);
  }
  return lattice;
}

}  // namespace

FaceLattice face_lattice(const IncidenceStructure& inc, int up_to_dim) {
  const auto faces = intersection_closure(inc);
  return group(faces, chain_dimensions(faces), up_to_dim);
}

FaceLattice face_lattice(const IncidenceStructure& inc, std::span<const Vector> points,
                         int up_to_dim) {
  if (points.size() != inc.vertex_count) throw DimensionError("face_lattice: point count mismatch");
  const auto faces = intersection_closure(inc);
  const auto abstract = chain_dimensions(faces);
  std::vector<int> geometric(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::vector<Vector> pts;
    for (auto v : faces[i].indices()) pts.push_back(points[v]);
    geometric[i] = affine_dimension(pts);
    if (geometric[i] != abstract[i]) {
      throw ConstructionError("face lattice: chain length disagrees with affine dimension");
    }
  }
  return group(faces, geometric, up_to_dim);
}

std::vector<Edge> graph_of(const FaceLattice& lattice) {
  std::vector<Edge> edges;
  if (lattice.size() < 2) return edges;
  for (const auto& e : lattice[1]) {
    const auto idx = e.indices();
    if (idx.size() != 2) throw ConstructionError("graph_of: 1-face without two vertices");
    edges.emplace_back(idx[0], idx[1]);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Edge> graph_of(const IncidenceStructure& inc) { return graph_of(face_lattice(inc, 1)); }

bool is_cubical(const FaceLattice& lattice) {
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    for (const auto& f : lattice[k]) {
      if (f.count() != (std::size_t{1} << k)) return false;
    }
  }
  return true;
}

bool is_cubical(const IncidenceStructure& inc) { return is_cubical(face_lattice(inc)); }

std::optional<std::vector<std::uint64_t>> hypercube_graph_iso(std::span<const Edge> edges,
                                                              std::size_t vertex_count,
                                                              std::size_t n) {
  if (n >= 32 || vertex_count != (std::size_t{1} << n)) return std::nullopt;
  if (edges.size() != n * (vertex_count / 2)) return std::nullopt;
  std::vector<std::vector<std::uint32_t>> adj(vertex_count);
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count || a == b) return std::nullopt;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    if (list.size() != n || std::adjacent_find(list.begin(), list.end()) != list.end()) {
      return std::nullopt;
    }
  }

  constexpr std::uint64_t unset = ~std::uint64_t{0};
  std::vector<std::uint64_t> label(vertex_count, unset);
  std::vector<int> layer(vertex_count, -1);
  label[0] = 0;
  layer[0] = 0;
  std::vector<std::uint32_t> frontier{0};
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = adj[0][k];
    label[v] = std::uint64_t{1} << k;
    layer[v] = 1;
  }
  frontier.assign(adj[0].begin(), adj[0].end());
  for (int depth = 2; !frontier.empty(); ++depth) {
    std::vector<std::uint32_t> next;
    for (auto u : frontier) {
      for (auto w : adj[u]) {
        if (layer[w] == -1) {
          layer[w] = depth;
          label[w] = 0;
          next.push_back(w);
        }
        if (layer[w] == depth) label[w] |= label[u];
      }
    }
    for (auto w : next) {
      if (std::popcount(label[w]) != depth) return std::nullopt;
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  std::unordered_set<std::uint64_t> distinct;
  for (auto l : label) {
    if (l == unset || !distinct.insert(l).second) return std::nullopt;
  }
  for (const auto& [a, b] : edges) {
    if (std::popcount(label[a] ^ label[b]) != 1) return std::nullopt;
  }
  return label;
}

}  // namespace ncp
