#include "ncp/classify.hpp"

#include "ncp/errors.hpp"
#include "ncp/hull.hpp"
#include "ncp/lattice.hpp"
#include "ncp/skeleton.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace ncp {

std::string KLMTriple::to_string() const {
  return "(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
}

std::vector<KLMTriple> valid_triples(std::size_t d) {
  std::vector<KLMTriple> out;
  for (std::size_t k = d; k >= 1; --k)
    for (std::size_t m = std::min(k, d - k); m >= 1; --m)
      out.push_back({k, d + 1 - k - m, m});
  return out;
}

FirstConstruction first_construction(std::size_t d) {
  if (d < 2 || d % 2 != 0) throw InputError("first construction needs an even d >= 2");
  const std::size_t r = d / 2;
  FirstConstruction fc;
  fc.d = d;
  fc.h.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    for (int s : {-1, 1}) {
      Inequality ineq{Vector(d, Rational(0)), Rational(2)};
      ineq.normal[i] = s;
      fc.h.inequalities.push_back(std::move(ineq));
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = r; j < d; ++j)
      for (int si : {-1, 1})
        for (int sj : {-1, 1}) {
          Inequality ineq{Vector(d, Rational(0)), Rational(3)};
          ineq.normal[i] = si;
          ineq.normal[j] = sj;
          fc.h.inequalities.push_back(std::move(ineq));
        }

  fc.v.dim = d;
  for (int part : {-1, 1}) {
    // part -1: Q x 2Q; part +1: 2Q x Q.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
      Vector x(d);
      SignVector label(d + 1);
      for (std::size_t i = 0; i < d; ++i) {
        const int s = ((bits >> i) & 1U) != 0 ? 1 : -1;
        const bool first_block = i < r;
        const int scale = (first_block == (part < 0)) ? 1 : 2;
        x[i] = s * scale;
        label[i] = sign_of(s);
      }
      label[d] = sign_of(part);
      fc.v.points.push_back(std::move(x));
      fc.v.labels.push_back(std::move(label));
    }
  }
  return fc;
}

bool first_construction_consistent(const FirstConstruction& fc) {
  const VPolytope from_h = vertices_from_hrep(fc.h);
  std::set<Vector> listed(fc.v.points.begin(), fc.v.points.end());
  std::set<Vector> computed(from_h.points.begin(), from_h.points.end());
  if (listed != computed) return false;
  const IncidenceStructure inc = facets_from_vrep(fc.v);
  std::set<std::pair<Vector, Rational>> a, b;
  for (const auto& ineq : inc.facet_inequalities) {
    const auto c = canonical_form(ineq);
    a.emplace(c.normal, c.rhs);
  }
  for (const auto& ineq : fc.h.inequalities) {
    const auto c = canonical_form(ineq);
    b.emplace(c.normal, c.rhs);
  }
  return a == b;
}

bool in_pklm_sphere(const KLMTriple& t, const SignVector& face) {
  bool in_ball = false, in_complement = false;
  for (std::size_t i = 0; i < face.size(); ++i) {
    const Sign s = face[i];
    if (i < t.k) {
      in_ball = in_ball || s != Sign::Zero;
    } else if (i < t.k + t.l) {
      in_ball = in_ball || s == Sign::Plus;
      in_complement = in_complement || s == Sign::Minus;
    } else {
      in_complement = in_complement || s != Sign::Zero;
    }
  }
  return in_ball && in_complement;
}

CubicalComplex pklm_sphere(const KLMTriple& t) {
  const std::size_t n = t.k + t.l + t.m;
  if (t.l < 1 || n < 2) throw InputError("triple needs l >= 1");
  const std::size_t d = n - 1;
  std::vector<SignVector> top;
  for (const auto& face : cube_faces(n, d - 1))
    if (in_pklm_sphere(t, face)) top.push_back(face);
  return CubicalComplex::from_cube_faces(n, top);
}

std::int64_t pklm_delta(std::size_t i, std::size_t k, std::size_t l, std::size_t m) {
  std::int64_t sum = 0;
  for (std::size_t j = 0; j <= i; ++j) {
    const auto lc = binomial(static_cast<std::int64_t>(l), static_cast<std::int64_t>(i - j));
    const auto km = binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(j)) +
                    binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(j));
    sum += lc * km * (std::int64_t{1} << j);
  }
  return sum;
}

FVector pklm_fvector(const KLMTriple& t) {
  const std::size_t n = t.k + t.l + t.m;
  if (n < 3 || n > 40) throw InputError("pklm_fvector: unsupported dimension");
  const std::size_t d = n - 1;
  FVector f(d);
  for (std::size_t i = 2; i <= n; ++i) {
    f[n - i] = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i)) * (std::int64_t{1} << i) -
               pklm_delta(i, t.k, t.l, t.m);
  }
  return f;
}

std::vector<KLMTriple> neighborly_triples(std::size_t d) {
  std::vector<KLMTriple> out;
  for (const auto& t : valid_triples(d))
    if (t.m >= d / 2) out.push_back(t);
  return out;
}

UbcReport ubc_polytope_report(std::size_t d) {
  if (d < 2) throw InputError("ubc report needs d >= 2");
  UbcReport rep;
  rep.d = d;
  const auto triples = valid_triples(d);
  rep.triples = triples.size();
  rep.neighborly = neighborly_triples(d);
  auto fail = [&](std::size_t i, const std::string& what, const KLMTriple& t) {
    rep.failures.push_back("i=" + std::to_string(i) + " " + what + " at " + t.to_string());
  };
  for (std::size_t i = 0; i <= d + 1; ++i) {
    for (const auto& [k, l, m] : triples) {
      const auto here = pklm_delta(i, k, l, m);
      if (k > m) {
        ++rep.checks;
        if (here < pklm_delta(i, k - 1, l, m + 1)) fail(i, "shift k->m", {k, l, m});
      }
      if (l >= 2) {
        ++rep.checks;
        if (here < pklm_delta(i, k + 1, l - 2, m + 1)) fail(i, "split l", {k, l, m});
      }
      if (l == 2 && k > m) {
        ++rep.checks;
        if (here < pklm_delta(i, k, 1, m + 1)) fail(i, "l=2 to l=1", {k, l, m});
      }
      if (l == 2 && k == m) {
        ++rep.checks;
        if (here != pklm_delta(i, k + 1, 1, k)) fail(i, "l=2 symmetric identity", {k, l, m});
      }
    }
  }
  // Neighborly triples minimize each delta_i, hence maximize each f_i.
  rep.neighborly_maximizes = !rep.neighborly.empty();
  rep.max_fvector.assign(d, 0);
  for (const auto& t : triples) {
    const auto f = pklm_fvector(t);
    for (std::size_t j = 0; j < d; ++j) rep.max_fvector[j] = std::max(rep.max_fvector[j], f[j]);
  }
  for (const auto& t : rep.neighborly) {
    if (pklm_fvector(t) != rep.max_fvector) rep.neighborly_maximizes = false;
    for (std::size_t i = 0; i <= d + 1; ++i) {
      const auto mine = pklm_delta(i, t.k, t.l, t.m);
      for (const auto& u : triples) {
        if (pklm_delta(i, u.k, u.l, u.m) < mine) rep.neighborly_maximizes = false;
      }
    }
  }
  return rep;
}

UbcReport ubc_polytope_case(std::size_t d) {
  auto rep = ubc_polytope_report(d);
  if (!rep.ok()) {
    throw TheoremViolation("delta relations fail for d=" + std::to_string(d) +
                           (rep.failures.empty() ? std::string(": neighborly triple not maximal")
                                                 : ": " + rep.failures.front()));
  }
  return rep;
}

namespace {

// Rows (a, b, c, e) standing for the four points (+-a, +-b, c, e).
VPolytope from_sign_rows(const std::vector<std::array<Rational, 4>>& rows) {
  VPolytope v;
  v.dim = 4;
  for (const auto& r : rows)
    for (int s0 : {-1, 1})
      for (int s1 : {-1, 1}) v.points.push_back({s0 * r[0], s1 * r[1], r[2], r[3]});
  return v;
}

Rational q(long p, long den = 1) {
  Rational x(p, den);
  x.canonicalize();
  return x;
}

bool graph_is_q5(const FaceLattice& lattice, std::size_t vertices) {
  const auto edges = graph_of(lattice);
  return hypercube_graph_iso(edges, vertices, 5).has_value();
}

}  // namespace

VPolytope cubical_q5_example() {
  return from_sign_rows({{q(1), q(1), q(1), q(1)},
                         {q(1), q(1), q(4), q(1)},
                         {q(2), q(2), q(3), q(4, 5)},
                         {q(2), q(2), q(2), q(4, 5)},
                         {q(3), q(3), q(2), q(1, 2)},
                         {q(3), q(3), q(3), q(1, 2)},
                         {q(4), q(4), q(0), q(0)},
                         {q(4), q(4), q(5), q(0)}});
}

VPolytope noncubical_q5_example() {
  return from_sign_rows({{q(1), q(1), q(1), q(0)},
                         {q(2), q(2), q(4), q(0)},
                         {q(3), q(3), q(3), q(1)},
                         {q(3), q(3), q(2), q(5, 4)},
                         {q(4), q(4), q(2), q(21, 20)},
                         {q(4), q(4), q(3), q(9, 5)},
                         {q(56, 13), q(56, 13), q(0), q(779, 260)},
                         {q(5), q(5), q(16), q(0)}});
}

bool Q5GraphExamplesReport::ok() const {
  return p_all_vertices && p_cube_facet && p_q5_graph && p_cubical && q_all_vertices && q_q5_graph &&
         q_one_big_facet && !q_cubical && q_double_cubical;
}

Q5GraphExamplesReport q5_graph_examples_report() {
  Q5GraphExamplesReport rep;
  {
    const VPolytope p = cubical_q5_example();
    const IncidenceStructure inc = facets_from_vrep(p);
    const FaceLattice lattice = face_lattice(inc, p.points);
    rep.p_fvector = f_vector(lattice);
    rep.p_all_vertices = lattice[0].size() == p.points.size();
    rep.p_q5_graph = graph_is_q5(lattice, p.points.size());
    rep.p_cubical = is_cubical(lattice);
    // The last eight points, at x4 = 0.
    VertexSet bottom(p.points.size());
    for (std::uint32_t i = 24; i < 32; ++i) bottom.insert(i);
    for (std::size_t f = 0; f < inc.facets.size(); ++f) {
      if (inc.facets[f] != bottom) continue;
      const auto& ineq = inc.facet_inequalities[f];
      const bool is_x4 = ineq.normal == Vector{0, 0, 0, -1} && ineq.rhs == 0;
      FVector sub(3, 0);
      for (std::size_t k = 0; k < 3; ++k)
        for (const auto& g : lattice[k])
          if (g.is_subset_of(bottom)) ++sub[k];
      rep.p_cube_facet = is_x4 && sub == FVector{8, 12, 6};
    }
  }
  {
    const VPolytope p = noncubical_q5_example();
    const IncidenceStructure inc = facets_from_vrep(p);
    const FaceLattice lattice = face_lattice(inc, p.points);
    rep.q_fvector = f_vector(lattice);
    rep.q_all_vertices = lattice[0].size() == p.points.size();
    rep.q_q5_graph = graph_is_q5(lattice, p.points.size());
    rep.q_cubical = is_cubical(lattice);
    rep.q_double_cubical = double_r_cubicality_check(lattice, 1, 4);
    // Rows 0, 1 and 7 of the table.
    VertexSet expected(p.points.size());
    for (std::uint32_t i : {0U, 1U, 2U, 3U, 4U, 5U, 6U, 7U, 28U, 29U, 30U, 31U}) expected.insert(i);
    std::size_t big = 0;
    bool matches = false;
    for (const auto& f : inc.facets) {
      if (f.count() == 12) {
        ++big;
        matches = f == expected;
      }
    }
    rep.q_one_big_facet = big == 1 && matches;
  }
  return rep;
}

Q5GraphExamplesReport verify_q5_graph_examples() {
  auto rep = q5_graph_examples_report();
  if (!rep.ok()) throw TranscriptionError("5-cube-graph example coordinates fail their checks");
  return rep;
}

}  // namespace ncp
