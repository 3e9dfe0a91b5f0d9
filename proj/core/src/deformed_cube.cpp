#include "ncp/deformed_cube.hpp"

#include "ncp/errors.hpp"
#include "ncp/hull.hpp"

#include <map>
#include <numeric>
#include <set>

namespace ncp {

namespace {

void check_epsilon(const Rational& eps) {
  if (eps <= 0 || eps > 1) throw InputError("epsilon must lie in (0, 1]");
}

// 2^C(k,2) / eps^(k-1), k 1-based.
Rational bound_rhs(std::size_t k, const Rational& eps) {
  Rational r = 1;
  for (std::size_t i = 0; i < k * (k - 1) / 2; ++i) r *= 2;
  for (std::size_t i = 1; i < k; ++i) r /= eps;
  return r;
}

// (-1)^k C(k-2, j-1) for 1 <= j < k.
Rational lower_coefficient(std::size_t k, std::size_t j) {
  const auto c = binomial(static_cast<std::int64_t>(k) - 2, static_cast<std::int64_t>(j) - 1);
  return Rational(k % 2 == 0 ? c : -c);
}

}  // namespace

HPolytope build_deformed_cube(std::size_t n, const Rational& eps) {
  if (n == 0) throw InputError("deformed cube needs n >= 1");
  check_epsilon(eps);
  HPolytope h;
  h.dim = n;
  for (std::size_t k = 1; k <= n; ++k) {
    for (int s : {-1, 1}) {
      Inequality ineq;
      ineq.normal.assign(n, Rational(0));
      for (std::size_t j = 1; j < k; ++j) ineq.normal[j - 1] = lower_coefficient(k, j);
      ineq.normal[k - 1] = s * eps;
      ineq.rhs = bound_rhs(k, eps);
      h.inequalities.push_back(std::move(ineq));
    }
  }
  return h;
}

VPolytope deformed_cube_vertices(std::size_t n, const Rational& eps) {
  if (n == 0 || n >= 63) throw InputError("deformed cube vertices need 1 <= n < 63");
  check_epsilon(eps);
  VPolytope v;
  v.dim = n;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Vector x(n);
    for (std::size_t k = 1; k <= n; ++k) {
      Rational rest = bound_rhs(k, eps);
      for (std::size_t j = 1; j < k; ++j) rest -= lower_coefficient(k, j) * x[j - 1];
      const int sigma = ((bits >> (k - 1)) & 1U) != 0 ? 1 : -1;
      x[k - 1] = sigma * rest / eps;
    }
    v.points.push_back(std::move(x));
    v.labels.push_back(SignVector::from_bits(n, bits));
  }
  return v;
}

bool verify_combinatorial_cube(const HPolytope& h) {
  const std::size_t n = h.dim;
  if (n == 0 || n >= 63 || h.inequalities.size() != 2 * n) return false;
  const auto en = enumerate_vertices(h);
  if (en.polytope.points.size() != (std::size_t{1} << n)) return false;
  std::set<std::uint64_t> patterns;
  for (const auto& tight : en.tight) {
    if (tight.count() != n) return false;
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool minus = tight.contains(2 * k);
      const bool plus = tight.contains(2 * k + 1);
      if (minus == plus) return false;
      if (plus) bits |= std::uint64_t{1} << k;
    }
    patterns.insert(bits);
  }
  // Every sign choice occurs once, so inequality (k, s) is tight exactly at
  // the vertices with sign s in position k: the incidences of the n-cube.
  return patterns.size() == en.polytope.points.size();
}

Matrix sigma_matrix(const SignVector& sigma, std::size_t d, const Rational& eps) {
  const std::size_t n = sigma.size();
  if (d > n) throw DimensionError("sigma_matrix: d > n");
  const std::size_t cols = n - d;
  Matrix a(n, cols);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 1; j <= cols && j <= k; ++j) {
      if (j == k) {
        a(k - 1, j - 1) = to_int(sigma[k - 1]) * eps;
      } else {
        a(k - 1, j - 1) = lower_coefficient(k, j);
      }
    }
  }
  return a;
}

bool certify_epsilon(std::size_t n, std::size_t d, const Rational& eps) {
  if (d < 2 || n < d) throw InputError("certify_epsilon needs n >= d >= 2");
  check_epsilon(eps);
  const std::size_t cols = n - d;
  if (cols == 0) return true;
  const Matrix plus_eps = sigma_matrix(SignVector(n, Sign::Plus), d, eps);
  const Matrix at_zero = sigma_matrix(SignVector(n, Sign::Plus), d, Rational(0));

  // rows are 0-based indices into A, drawn from 1..n-1 (A-bar drops row 0).
  std::vector<std::size_t> rows(cols);
  std::iota(rows.begin(), rows.end(), std::size_t{1});
  while (true) {
    const Matrix ref = at_zero.select_rows(rows);
    const int ref_sign = sign(determinant(ref));
    if (ref_sign == 0) return false;
    std::vector<std::size_t> diagonal;  // positions within `rows` holding a diagonal entry
    for (std::size_t i = 0; i < cols; ++i)
      if (rows[i] < cols) diagonal.push_back(i);
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << diagonal.size()); ++pattern) {
      Matrix m = plus_eps.select_rows(rows);
      for (std::size_t b = 0; b < diagonal.size(); ++b) {
        if (((pattern >> b) & 1U) != 0) {
          const std::size_t i = diagonal[b];
          m(i, rows[i]) = -m(i, rows[i]);
        }
      }
      if (sign(determinant(m)) != ref_sign) return false;
    }
    // next subset of {1, ..., n-1}
    std::size_t i = cols;
    while (i > 0 && rows[i - 1] == n - 1 - (cols - i)) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t j = i; j < cols; ++j) rows[j] = rows[j - 1] + 1;
  }
  return true;
}

Rational choose_epsilon(std::size_t n, std::size_t d) {
  Rational eps(1, 2);
  for (int step = 0; step < 128; ++step, eps /= 2) {
    if (certify_epsilon(n, d, eps)) return eps;
  }
  throw ConstructionError("no certified epsilon down to 2^-128");
}

VPolytope project_last(const VPolytope& v, std::size_t d) {
  if (d > v.dim) throw DimensionError("project_last: d exceeds the ambient dimension");
  VPolytope out;
  out.dim = d;
  out.labels = v.labels;
  std::map<Vector, std::size_t> seen;
  for (std::size_t i = 0; i < v.points.size(); ++i) {
    Vector p(v.points[i].end() - static_cast<std::ptrdiff_t>(d), v.points[i].end());
    if (!seen.emplace(p, i).second) {
      throw SkeletonViolation("projection identifies two vertices");
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

VPolytope projected_cube(std::size_t n, std::size_t d, const Rational& eps) {
  return project_last(deformed_cube_vertices(n, eps), d);
}

bool is_alternating(std::span<const std::size_t> sorted_indices) {
  for (std::size_t i = 1; i < sorted_indices.size(); ++i) {
    if (sorted_indices[i] <= sorted_indices[i - 1]) return false;
    if ((sorted_indices[i] - sorted_indices[i - 1]) % 2 == 0) return false;
  }
  return true;
}

std::vector<std::size_t> longest_alternating_subset(std::span<const std::size_t> sorted_indices) {
  std::vector<std::size_t> out;
  for (auto i : sorted_indices) {
    if (out.empty() || (i - out.back()) % 2 == 1) out.push_back(i);
  }
  return out;
}

}  // namespace ncp
