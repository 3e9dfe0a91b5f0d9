#include "ncp/io.hpp"

#include "ncp/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace ncp {

namespace {

using nlohmann::ordered_json;

ordered_json vector_json(const Vector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

ordered_json inequality_json(const Inequality& ineq) {
  ordered_json o;
  o["normal"] = vector_json(ineq.normal);
  o["rhs"] = to_string(ineq.rhs);
  return o;
}

Vector cross(const Vector& a, const Vector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vector minus(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Sorts the points of a convex polygon lying in a plane with normal `n`
// counterclockwise around it, starting from the first index.
std::vector<std::uint32_t> cyclic_order(const std::vector<Vector>& pts, std::vector<std::uint32_t> idx,
                                        const Vector& n) {
  Vector c(3, Rational(0));
  for (auto i : idx)
    for (int k = 0; k < 3; ++k) c[k] += pts[i][k];
  for (auto& x : c) x /= static_cast<long>(idx.size());
  const Vector ref = minus(pts[idx.front()], c);
  // 0 for angles in [0, pi), 1 for [pi, 2pi), measured from ref around n.
  auto half = [&](const Vector& a) {
    const int s = sign(dot(cross(ref, a), n));
    return (s > 0 || (s == 0 && sign(dot(ref, a)) > 0)) ? 0 : 1;
  };
  std::sort(idx.begin() + 1, idx.end(), [&](std::uint32_t i, std::uint32_t j) {
    const Vector a = minus(pts[i], c), b = minus(pts[j], c);
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return sign(dot(cross(a, b), n)) > 0;
  });
  return idx;
}

}  // namespace

std::string to_json(const HPolytope& h) {
  ordered_json o;
  o["dim"] = h.dim;
  ordered_json list = ordered_json::array();
  for (const auto& ineq : h.inequalities) list.push_back(inequality_json(ineq));
  o["inequalities"] = std::move(list);
  return o.dump(2);
}

std::string to_json(const VPolytope& v) {
  ordered_json o;
  o["dim"] = v.dim;
  ordered_json pts = ordered_json::array();
  for (const auto& p : v.points) pts.push_back(vector_json(p));
  o["points"] = std::move(pts);
  if (v.labeled()) {
    ordered_json labels = ordered_json::array();
    for (const auto& l : v.labels) labels.push_back(l.to_string());
    o["labels"] = std::move(labels);
  }
  return o.dump(2);
}

std::string to_json(const IncidenceStructure& inc) {
  ordered_json o;
  o["dim"] = inc.dim;
  o["vertex_count"] = inc.vertex_count;
  o["facet_count"] = inc.facet_count();
  ordered_json facets = ordered_json::array();
  for (std::size_t i = 0; i < inc.facets.size(); ++i) {
    ordered_json f;
    f["vertices"] = inc.facets[i].indices();
    if (i < inc.facet_inequalities.size()) f["inequality"] = inequality_json(inc.facet_inequalities[i]);
    facets.push_back(std::move(f));
  }
  o["incidence"] = std::move(facets);
  return o.dump(2);
}

std::string to_off(const VPolytope& v, const IncidenceStructure& inc) {
  if (v.dim != 2 && v.dim != 3) throw DimensionError("OFF export needs dimension 2 or 3");
  std::vector<Vector> pts;
  for (const auto& p : v.points) {
    Vector q = p;
    if (q.size() == 2) q.emplace_back(0);
    pts.push_back(std::move(q));
  }
  std::vector<std::vector<std::uint32_t>> faces;
  if (v.dim == 2) {
    std::vector<std::uint32_t> all(pts.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    faces.push_back(cyclic_order(pts, all, Vector{0, 0, 1}));
  } else {
    if (inc.facet_inequalities.size() != inc.facets.size()) {
      throw InputError("OFF export needs facet inequalities");
    }
    for (std::size_t f = 0; f < inc.facets.size(); ++f) {
      faces.push_back(cyclic_order(pts, inc.facets[f].indices(), inc.facet_inequalities[f].normal));
    }
  }
  std::ostringstream out;
  out << "OFF\n" << pts.size() << ' ' << faces.size() << " 0\n";
  for (const auto& p : pts) out << to_string(p[0]) << ' ' << to_string(p[1]) << ' ' << to_string(p[2]) << '\n';
  for (const auto& f : faces) {
    out << f.size();
    for (auto i : f) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

}  // namespace ncp
