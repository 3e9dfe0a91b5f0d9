#include "ncp/hull.hpp"

#include "ncp/errors.hpp"
#include "ncp/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <type_traits>

namespace ncp {

namespace {

using Int128 = __int128;

// ---------------------------------------------------------------------------
// Vertex enumeration

// Solves a x = b for square invertible a by Gauss-Jordan over Q.
std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p], b[c]);
    }
    const Rational inv = 1 / a(c, c);
    for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  return b;
}

// Calls f(indices) for every k-subset of [0, n) in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Matrix normal_matrix(const HPolytope& h, std::span<const std::size_t> rows) {
  Matrix a(rows.size(), h.dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < h.dim; ++c) a(i, c) = h.inequalities[rows[i]].normal[c];
  return a;
}

void require_bounded(const HPolytope& h) {
  const std::size_t d = h.dim;
  std::vector<std::size_t> all(h.inequalities.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (rank(normal_matrix(h, all)) < d) {
    throw UnboundedError("inequality normals do not span the ambient space");
  }
  if (d == 0) return;
  // With full-rank normals the recession cone is pointed; it is nontrivial
  // iff one of its candidate extreme rays (kernel of d-1 independent rows)
  // satisfies every normal . y <= 0.
  bool unbounded = false;
  for_each_subset(h.inequalities.size(), d - 1, [&](std::span<const std::size_t> rows) {
    if (unbounded) return;
    const Matrix a = normal_matrix(h, rows);
    if (d > 1 && rank(a) != d - 1) return;
    Vector y;
    if (d == 1) {
      y = {Rational(1)};
    } else {
      y = kernel_vector(a.transpose());
    }
    for (int s : {1, -1}) {
      bool ray = true;
      for (const auto& ineq : h.inequalities) {
        if (s * sign(dot(ineq.normal, y)) > 0) {
          ray = false;
          break;
        }
      }
      if (ray) unbounded = true;
    }
  });
  if (unbounded) throw UnboundedError("polyhedron has a nonzero recession direction");
}

// ---------------------------------------------------------------------------
// Facet enumeration kernel over an integer type (__int128 when the magnitude
// bound allows, mpz otherwise).

Integer to_integer(const Integer& z) { return z; }

Integer to_integer(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer z = (hi << 64) + lo;
  return neg ? Integer(-z) : z;
}

template <class Int>
Int from_integer(const Integer& z) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return z;
  } else {
    return static_cast<Int>(z.get_si());
  }
}

template <class Int>
int sign_of_int(const Int& v) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return sgn(v);
  } else {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
}

// Determinant of rows [0, k) of a k x dim row-major block restricted to the
// columns in `mask`, by Laplace expansion (no division, so intermediate values
// stay within the Hadamard-style bound used to pick Int).
template <class Int>
Int minor_det(const std::vector<Int>& rows, std::size_t dim, std::size_t k, std::uint32_t mask,
              std::size_t r = 0) {
  if (r == k) return Int(1);
  Int sum(0);
  int position = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    if (((mask >> c) & 1U) == 0) continue;
    const Int& entry = rows[r * dim + c];
    if (sign_of_int(entry) != 0) {
      Int term = entry * minor_det(rows, dim, k, mask & ~(1U << c), r + 1);
      if (position % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    ++position;
  }
  return sum;
}

template <class Int>
struct FacetRecord {
  std::vector<Int> normal;  // outward
  Int offset;               // normal . x <= offset on the shifted points
};

template <class Int>
class FacetSearch {
public:
  FacetSearch(std::size_t dim, std::size_t count, std::vector<Int> coords)
      : dim_(dim), count_(count), x_(std::move(coords)) {}

  std::map<VertexSet, FacetRecord<Int>> run() const {
    const std::size_t workers = std::min(worker_count(), count_);
    std::vector<std::map<VertexSet, FacetRecord<Int>>> found(std::max<std::size_t>(workers, 1));
    parallel_for(count_, workers, [&](std::size_t w, std::size_t first) {
      std::vector<std::size_t> prefix{first};
      extend(prefix, found[w]);
    });
    auto merged = std::move(found.front());
    for (std::size_t w = 1; w < found.size(); ++w) merged.merge(found[w]);
    return merged;
  }

private:
  const Int& at(std::size_t i, std::size_t c) const { return x_[i * dim_ + c]; }

  // prefix holds indices i0 < ... ; once it has dim-1 entries, the normal is
  // linear in the last point and every completion is tested.
  void extend(std::vector<std::size_t>& prefix, std::map<VertexSet, FacetRecord<Int>>& out) const {
    if (prefix.size() + 1 == dim_) {
      test_completions(prefix, out);
      return;
    }
    for (std::size_t j = prefix.back() + 1; j < count_; ++j) {
      prefix.push_back(j);
      extend(prefix, out);
      prefix.pop_back();
    }
  }

  void test_completions(const std::vector<std::size_t>& prefix,
                        std::map<VertexSet, FacetRecord<Int>>& out) const {
    const std::size_t d = dim_;
    const std::size_t k = d - 2;
    const std::size_t base = prefix.front();
    std::vector<Int> v(k * d);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t c = 0; c < d; ++c) v[a * d + c] = at(prefix[a + 1], c) - at(base, c);

    // normal(w)_c = det[v_1; ...; v_k; w; e_c] = sum_e lin[c][e] w_e with
    // lin[c][e] = (-1)^(c + e' + 1) det(v without columns c, e), where e' is
    // the position of e once column c is removed.
    const std::uint32_t all = (d >= 32) ? ~0U : ((1U << d) - 1U);
    std::vector<Int> lin(d * d, Int(0));
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t e = 0; e < c; ++e) {
        const Int m = minor_det(v, d, k, all & ~(1U << c) & ~(1U << e));
        // e < c: e' = e
        const bool negative = ((c + e + 1) % 2) != 0;
        lin[c * d + e] = negative ? Int(-m) : m;
        lin[e * d + c] = negative ? m : Int(-m);
      }
    }

    std::vector<Int> w(d), normal(d);
    for (std::size_t j = prefix.back() + 1; j < count_; ++j) {
      for (std::size_t c = 0; c < d; ++c) w[c] = at(j, c) - at(base, c);
      bool nonzero = false;
      for (std::size_t c = 0; c < d; ++c) {
        Int s(0);
        for (std::size_t e = 0; e < d; ++e) {
          if (e != c && sign_of_int(w[e]) != 0) s += lin[c * d + e] * w[e];
        }
        normal[c] = s;
        nonzero = nonzero || sign_of_int(s) != 0;
      }
      if (!nonzero) continue;  // affinely dependent
      Int offset(0);
      for (std::size_t c = 0; c < d; ++c) offset += normal[c] * at(base, c);

      int side = 0;
      bool supporting = true;
      for (std::size_t i = 0; i < count_; ++i) {
        Int s(0);
        for (std::size_t c = 0; c < d; ++c) s += normal[c] * at(i, c);
        s -= offset;
        const int sg = sign_of_int(s);
        if (sg == 0) continue;
        if (side == 0) {
          side = sg;
        } else if (side != sg) {
          supporting = false;
          break;
        }
      }
      if (!supporting) continue;

      VertexSet incidence(count_);
      for (std::size_t i = 0; i < count_; ++i) {
        Int s(0);
        for (std::size_t c = 0; c < d; ++c) s += normal[c] * at(i, c);
        if (sign_of_int(Int(s - offset)) == 0) incidence.insert(i);
      }
      if (out.contains(incidence)) continue;
      FacetRecord<Int> rec{normal, offset};
      if (side > 0) {
        for (auto& x : rec.normal) x = -x;
        rec.offset = -rec.offset;
      }
      out.emplace(std::move(incidence), std::move(rec));
    }
  }

  std::size_t dim_;
  std::size_t count_;
  std::vector<Int> x_;
};

Integer factorial(std::size_t k) {
  Integer f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

// Largest magnitude any intermediate of FacetSearch can reach, given
// |coordinate| <= bound after centering.
Integer magnitude_bound(std::size_t d, const Integer& bound) {
  const Integer two_b = 2 * bound;
  Integer minor = factorial(d - 2);
  for (std::size_t i = 0; i < d - 2; ++i) minor *= two_b;
  const Integer normal = minor * static_cast<unsigned long>(d) * two_b;
  return normal * static_cast<unsigned long>(2 * d) * (bound + 1);
}

struct IntegerPoints {
  std::vector<Integer> coords;  // centered, row-major
  std::vector<Integer> shift;   // original * scale = coords + shift
  Integer scale;
  Integer bound;
};

IntegerPoints to_integer_points(const VPolytope& v) {
  IntegerPoints ip;
  ip.scale = 1;
  for (const auto& p : v.points)
    for (const auto& q : p) mpz_lcm(ip.scale.get_mpz_t(), ip.scale.get_mpz_t(), q.get_den_mpz_t());
  const std::size_t d = v.dim;
  ip.coords.resize(v.points.size() * d);
  for (std::size_t i = 0; i < v.points.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) {
      Rational scaled = v.points[i][c] * ip.scale;
      ip.coords[i * d + c] = scaled.get_num();
    }
  ip.shift.assign(d, 0);
  for (std::size_t c = 0; c < d; ++c) {
    Integer lo = ip.coords[c], hi = ip.coords[c];
    for (std::size_t i = 1; i < v.points.size(); ++i) {
      lo = std::min(lo, ip.coords[i * d + c]);
      hi = std::max(hi, ip.coords[i * d + c]);
    }
    Integer mid = lo + hi;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
    ip.shift[c] = mid;
  }
  ip.bound = 0;
  for (std::size_t i = 0; i < v.points.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) {
      ip.coords[i * d + c] -= ip.shift[c];
      ip.bound = std::max(ip.bound, Integer(abs(ip.coords[i * d + c])));
    }
  return ip;
}

template <class Int>
IncidenceStructure run_search(const VPolytope& v, const IntegerPoints& ip) {
  std::vector<Int> coords;
  coords.reserve(ip.coords.size());
  for (const auto& z : ip.coords) coords.push_back(from_integer<Int>(z));
  const auto found = FacetSearch<Int>(v.dim, v.points.size(), std::move(coords)).run();

  std::vector<std::pair<VertexSet, Inequality>> facets;
  facets.reserve(found.size());
  for (const auto& [incidence, rec] : found) {
    std::vector<Integer> normal;
    Integer g = 0;
    for (const auto& x : rec.normal) {
      normal.push_back(to_integer(x));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), normal.back().get_mpz_t());
    }
    Integer offset = to_integer(rec.offset);
    Inequality ineq;
    Integer shifted = offset / g;
    for (std::size_t c = 0; c < normal.size(); ++c) {
      normal[c] /= g;
      shifted += normal[c] * ip.shift[c];
      ineq.normal.emplace_back(normal[c]);
    }
    ineq.rhs = Rational(shifted, ip.scale);
    ineq.rhs.canonicalize();
    facets.emplace_back(incidence, std::move(ineq));
  }
  std::sort(facets.begin(), facets.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });

  IncidenceStructure inc;
  inc.dim = v.dim;
  inc.vertex_count = v.points.size();
  for (auto& [s, ineq] : facets) {
    inc.facets.push_back(std::move(s));
    inc.facet_inequalities.push_back(std::move(ineq));
  }
  return inc;
}

IncidenceStructure facets_on_line(const VPolytope& v) {
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < v.points.size(); ++i) {
    if (v.points[i][0] < v.points[lo][0]) lo = i;
    if (v.points[i][0] > v.points[hi][0]) hi = i;
  }
  IncidenceStructure inc;
  inc.dim = 1;
  inc.vertex_count = v.points.size();
  inc.facets = {VertexSet(v.points.size(), {static_cast<std::uint32_t>(lo)}),
                VertexSet(v.points.size(), {static_cast<std::uint32_t>(hi)})};
  inc.facet_inequalities = {Inequality{{Rational(-1)}, -v.points[lo][0]},
                            Inequality{{Rational(1)}, v.points[hi][0]}};
  if (canonical_less(inc.facets[1], inc.facets[0])) {
    std::swap(inc.facets[0], inc.facets[1]);
    std::swap(inc.facet_inequalities[0], inc.facet_inequalities[1]);
  }
  return inc;
}

}  // namespace

int affine_dimension(std::span<const Vector> points) {
  if (points.empty()) return -1;
  const std::size_t d = points.front().size();
  Matrix diffs(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) diffs(i - 1, c) = points[i][c] - points[0][c];
  return static_cast<int>(rank(diffs));
}

VertexEnumeration enumerate_vertices(const HPolytope& h) {
  h.validate();
  require_bounded(h);
  std::map<Vector, VertexSet> vertices;
  const std::size_t m = h.inequalities.size();
  for_each_subset(m, h.dim, [&](std::span<const std::size_t> rows) {
    Vector b;
    for (auto r : rows) b.push_back(h.inequalities[r].rhs);
    const auto x = solve(normal_matrix(h, rows), std::move(b));
    if (!x) return;
    if (vertices.contains(*x)) return;
    VertexSet tight(m);
    for (std::size_t i = 0; i < m; ++i) {
      const int s = sign(Rational(dot(h.inequalities[i].normal, *x) - h.inequalities[i].rhs));
      if (s > 0) return;
      if (s == 0) tight.insert(i);
    }
    vertices.emplace(*x, std::move(tight));
  });
  if (vertices.empty()) throw EmptyPolytopeError("inequality system has no vertices");
  VertexEnumeration out;
  out.polytope.dim = h.dim;
  for (auto& [x, t] : vertices) {
    out.polytope.points.push_back(x);
    out.tight.push_back(std::move(t));
  }
  return out;
}

VPolytope vertices_from_hrep(const HPolytope& h) { return enumerate_vertices(h).polytope; }

IncidenceStructure facets_from_vrep(const VPolytope& v) {
  v.validate();
  if (v.dim == 0) throw SpanError("zero-dimensional ambient space");
  if (affine_dimension(v.points) != static_cast<int>(v.dim)) {
    throw SpanError("points do not affinely span the ambient space");
  }
  if (v.dim == 1) return facets_on_line(v);

  const IntegerPoints ip = to_integer_points(v);
  const Integer limit = Integer(1) << 125;
  if (v.dim <= 8 && magnitude_bound(v.dim, ip.bound) < limit) {
    return run_search<Int128>(v, ip);
  }
  return run_search<Integer>(v, ip);
}

}  // namespace ncp
