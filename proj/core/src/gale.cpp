#include "ncp/gale.hpp"

#include "ncp/deformed_cube.hpp"
#include "ncp/errors.hpp"
#include "ncp/oriented_matroid.hpp"
#include "ncp/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace ncp {

SignedIndexSet::SignedIndexSet(std::size_t n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto a = static_cast<std::size_t>(std::abs(elements_[i]));
    if (a == 0 || a > n_) throw InputError("signed index out of range");
    if (i > 0 && std::abs(elements_[i - 1]) == std::abs(elements_[i])) {
      throw InputError("signed index set repeats an index");
    }
  }
}

std::vector<std::size_t> SignedIndexSet::support() const {
  std::vector<std::size_t> s;
  for (int e : elements_) s.push_back(static_cast<std::size_t>(std::abs(e)));
  return s;
}

Sign SignedIndexSet::sign_at(std::size_t k) const {
  for (int e : elements_) {
    if (static_cast<std::size_t>(std::abs(e)) == k) return e > 0 ? Sign::Plus : Sign::Minus;
  }
  return Sign::Zero;
}

std::size_t SignedIndexSet::prefix_length() const {
  std::size_t p = 0;
  while (p < elements_.size() && static_cast<std::size_t>(std::abs(elements_[p])) == p + 1) ++p;
  return p;
}

std::string SignedIndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) s += ',';
    s += elements_[i] > 0 ? '+' : '-';
    s += std::to_string(std::abs(elements_[i]));
  }
  return s + "}";
}

bool is_gale_even(std::span<const std::size_t> sorted_support) {
  for (std::size_t i = 1; i < sorted_support.size(); ++i) {
    if ((sorted_support[i] - sorted_support[i - 1] - 1) % 2 != 0) return false;
  }
  return true;
}

bool satisfies_cubical_gale(const SignedIndexSet& alpha, std::size_t d) {
  const std::size_t n = alpha.n();
  if (d < 1 || d > n || alpha.size() != n - d + 1) return false;
  const auto support = alpha.support();
  const std::size_t p = alpha.prefix_length();
  if (p == 0) return is_gale_even(support);

  // Prefix: -1, +2, -3, ... up to p-1, then a free sign at p.
  for (std::size_t i = 1; i < p; ++i) {
    const Sign want = i % 2 == 0 ? Sign::Plus : Sign::Minus;
    if (alpha.sign_at(i) != want) return false;
  }
  const std::span<const std::size_t> tail(support.begin() + static_cast<std::ptrdiff_t>(p), support.end());
  if (tail.empty()) return true;
  if (tail.front() <= p + 1 || !is_gale_even(tail)) return false;
  const Sign sigma = alpha.sign_at(p);
  const Sign alternating_next = (p + 1) % 2 == 0 ? Sign::Plus : Sign::Minus;  // (-1)^(p+1)
  const bool first_gap_even_offset = (tail.front() - p) % 2 == 0;
  return sigma == alternating_next ? first_gap_even_offset : !first_gap_even_offset;
}

SignVector to_sign_vector(const SignedIndexSet& alpha) {
  SignVector v(alpha.n());
  for (int e : alpha.elements()) v[static_cast<std::size_t>(std::abs(e)) - 1] = e > 0 ? Sign::Plus : Sign::Minus;
  return v;
}

SignedIndexSet from_sign_vector(const SignVector& v) {
  std::vector<int> elements;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != Sign::Zero) elements.push_back(to_int(v[k]) * static_cast<int>(k + 1));
  }
  return SignedIndexSet(v.size(), std::move(elements));
}

std::vector<SignedIndexSet> facets_gale(std::size_t n, std::size_t d) {
  if (d < 2 || n < d || n > 20) throw InputError("facets_gale needs 2 <= d <= n <= 20");
  const std::size_t m = n - d + 1;
  // Supports as bit masks over {1..n} with m members.
  std::vector<std::uint32_t> supports;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == m) supports.push_back(mask);
  }
  const std::size_t workers = std::min(worker_count(), supports.size());
  std::vector<std::vector<SignVector>> found(std::max<std::size_t>(workers, 1));
  parallel_for(supports.size(), workers, [&](std::size_t w, std::size_t s) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (((supports[s] >> k) & 1U) != 0) idx.push_back(k + 1);
    for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << m); ++signs) {
      std::vector<int> elements;
      for (std::size_t b = 0; b < m; ++b) {
        const int k = static_cast<int>(idx[b]);
        elements.push_back(((signs >> b) & 1U) != 0 ? k : -k);
      }
      SignedIndexSet alpha(n, std::move(elements));
      if (satisfies_cubical_gale(alpha, d)) found[w].push_back(to_sign_vector(alpha));
    }
  });
  std::vector<SignVector> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  std::vector<SignedIndexSet> out;
  out.reserve(all.size());
  for (const auto& v : all) out.push_back(from_sign_vector(v));
  return out;
}

bool is_positive_circuit(const SignVector& sigma, std::span<const std::size_t> rows, std::size_t d,
                         const Rational& eps) {
  const std::size_t n = sigma.size();
  if (d > n) throw InputError("is_positive_circuit: d > n");
  if (rows.size() != n - d + 1) throw InputError("is_positive_circuit: need n-d+1 rows");
  for (auto r : rows)
    if (r >= n) throw InputError("is_positive_circuit: row out of range");
  return is_positive_circuit(sigma_matrix(sigma, d, eps).select_rows(rows));
}

CircuitQuery circuit_query(const SignedIndexSet& alpha) {
  CircuitQuery q{SignVector(alpha.n(), Sign::Plus), {}};
  for (int e : alpha.elements()) {
    const auto k = static_cast<std::size_t>(std::abs(e)) - 1;
    q.sigma[k] = e > 0 ? Sign::Plus : Sign::Minus;
    q.rows.push_back(k);
  }
  return q;
}

namespace {

std::int64_t pow2(std::size_t p) {
  if (p >= 62) throw FormulaError("power of two overflows");
  return std::int64_t{1} << p;
}

std::int64_t C(std::int64_t n, std::int64_t k) { return binomial(n, k); }

void check_nd(std::size_t n, std::size_t d) {
  if (d < 2 || n < d || n > 40) throw InputError("f_formula needs 2 <= d <= n <= 40");
}

}  // namespace

std::int64_t f_formula_shifted_sum(std::size_t n, std::size_t d) {
  check_nd(n, d);
  const auto h = static_cast<std::int64_t>(d / 2), h1 = static_cast<std::int64_t>((d + 1) / 2);
  std::int64_t sum = 0;
  for (std::int64_t p = 0; p + 1 <= static_cast<std::int64_t>(n - d); ++p) {
    sum += (C(h + p + 1, p + 2) + C(h1 + p, p + 2)) * pow2(static_cast<std::size_t>(p));
  }
  return 2 * static_cast<std::int64_t>(d) + 4 * sum;
}

std::int64_t f_formula_binomial_sum(std::size_t n, std::size_t d) {
  check_nd(n, d);
  const auto h = static_cast<std::int64_t>(d / 2), hm = static_cast<std::int64_t>((d - 1) / 2);
  std::int64_t sum = 0;
  for (std::int64_t p = 2; p <= static_cast<std::int64_t>(n - d + 1); ++p) {
    sum += (C(h + p - 1, p) + C(hm + p - 1, p)) * pow2(static_cast<std::size_t>(p));
  }
  return 2 * static_cast<std::int64_t>(d) + sum;
}

std::int64_t f_formula_parity_split(std::size_t n, std::size_t d) {
  check_nd(n, d);
  const auto k = static_cast<std::int64_t>(d / 2);
  std::int64_t sum = 0;
  for (std::int64_t p = 2; p <= static_cast<std::int64_t>(n - d + 1); ++p) {
    const auto base = C(k + p - 1, p);
    if (d % 2 == 1) {
      sum += base * pow2(static_cast<std::size_t>(p + 1));
    } else {
      const std::int64_t num = (p + 2 * k - 2) * base * pow2(static_cast<std::size_t>(p));
      if (num % (p + k - 1) != 0) throw FormulaError("parity-split term is not integral");
      sum += num / (p + k - 1);
    }
  }
  return 2 * static_cast<std::int64_t>(d) + sum;
}

std::int64_t f_formula(std::size_t n, std::size_t d) {
  const auto a = f_formula_shifted_sum(n, d);
  const auto b = f_formula_binomial_sum(n, d);
  const auto c = f_formula_parity_split(n, d);
  if (a != b || b != c) throw FormulaError("closed forms of f(n,d) disagree");
  return a;
}

std::vector<std::vector<SignVector>> boundary_faces(std::span<const SignVector> facets, std::size_t d) {
  std::vector<std::set<SignVector>> by_dim(d);
  for (const auto& f : facets) {
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (f[k] == Sign::Zero) free.push_back(k);
    if (free.size() + 1 != d) throw InputError("boundary_faces: facet of the wrong dimension");
    // Each free coordinate becomes -, 0 or +.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      SignVector g = f;
      std::uint64_t c = code;
      for (auto k : free) {
        g[k] = static_cast<Sign>(static_cast<int>(c % 3) - 1);
        c /= 3;
      }
      by_dim[g.zero_count()].insert(std::move(g));
    }
  }
  std::vector<std::vector<SignVector>> out;
  for (auto& s : by_dim) out.emplace_back(s.begin(), s.end());
  return out;
}

FVector gale_fvector(std::size_t n, std::size_t d) {
  std::vector<SignVector> facets;
  for (const auto& a : facets_gale(n, d)) facets.push_back(to_sign_vector(a));
  FVector f;
  for (const auto& group : boundary_faces(facets, d)) f.push_back(static_cast<std::int64_t>(group.size()));
  return f;
}

}  // namespace ncp
