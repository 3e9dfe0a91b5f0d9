#include "ncp/oriented_matroid.hpp"

#include "ncp/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ncp {

namespace {

std::vector<Rational> parameters(std::size_t n, std::span<const Rational> t) {
  std::vector<Rational> out;
  if (t.empty()) {
    for (std::size_t i = 1; i <= n; ++i) out.emplace_back(static_cast<long>(i));
  } else {
    if (t.size() != n) throw InputError("need one parameter per point");
    out.assign(t.begin(), t.end());
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) throw InputError("parameters must be strictly increasing");
  return out;
}

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

}  // namespace

VectorConfiguration cyclic_configuration(std::size_t n, std::size_t rank, std::span<const Rational> t) {
  if (rank > n) throw InputError("rank exceeds the number of points");
  const auto ts = parameters(n, t);
  VectorConfiguration cfg{Matrix(n, rank)};
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < rank; ++j, p *= ts[i]) cfg.rows(i, j) = p;
  }
  return cfg;
}

VectorConfiguration dual_cyclic_configuration(std::size_t n, std::size_t d, std::span<const Rational> t) {
  if (d + 1 > n) throw InputError("dual needs n >= d+1");
  auto cfg = cyclic_configuration(n, n - d - 1, t);
  for (std::size_t i = 1; i < n; i += 2)
    for (std::size_t j = 0; j < cfg.rank(); ++j) cfg.rows(i, j) = -cfg.rows(i, j);
  return cfg;
}

int chirotope(const VectorConfiguration& cfg, std::span<const std::size_t> subset) {
  if (subset.size() != cfg.rank()) throw InputError("chirotope needs exactly rank elements");
  return sign(determinant(cfg.rows.select_rows(subset)));
}

bool is_alternating(const VectorConfiguration& cfg) {
  bool ok = true;
  for_each_subset(cfg.size(), cfg.rank(), [&](std::span<const std::size_t> s) {
    if (ok && chirotope(cfg, s) <= 0) ok = false;
  });
  return ok;
}

VectorConfiguration deletion(const VectorConfiguration& cfg, std::size_t i) {
  return {cfg.rows.without_row(i)};
}

int contraction_chirotope(const VectorConfiguration& cfg, std::size_t i, std::span<const std::size_t> subset) {
  std::vector<std::size_t> rows{i};
  rows.insert(rows.end(), subset.begin(), subset.end());
  return chirotope(cfg, rows);
}

std::vector<std::vector<std::size_t>> gale_evenness_facets(std::size_t n, std::size_t d) {
  if (d < 2 || n <= d) throw InputError("gale_evenness_facets needs n > d >= 2");
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(n, d, [&](std::span<const std::size_t> s) {
    // Between any two non-members, an even number of members.
    std::size_t run = 0;
    bool inside = false, ok = true;
    std::size_t next = 0;
    for (std::size_t x = 0; x < n && ok; ++x) {
      const bool member = next < s.size() && s[next] == x;
      if (member) {
        ++next;
        ++run;
      } else {
        if (inside && run % 2 != 0) ok = false;
        inside = true;
        run = 0;
      }
    }
    if (ok) out.emplace_back(s.begin(), s.end());
  });
  return out;
}

std::int64_t cyclic_facet_count(std::size_t n, std::size_t d) {
  const auto N = static_cast<std::int64_t>(n);
  const auto D = static_cast<std::int64_t>(d);
  return binomial(N - (D + 1) / 2, D / 2) + binomial(N - 1 - D / 2, (D - 1) / 2);
}

std::vector<std::vector<std::size_t>> positive_cocircuit_zero_sets(const VectorConfiguration& cfg) {
  std::vector<std::vector<std::size_t>> out;
  if (cfg.rank() == 0) return out;
  for_each_subset(cfg.size(), cfg.rank() - 1, [&](std::span<const std::size_t> h) {
    if (cfg.rank() > 1 && rank(cfg.rows.select_rows(h)) != cfg.rank() - 1) return;
    std::vector<std::size_t> rows(h.begin(), h.end());
    rows.push_back(0);
    std::vector<std::size_t> zeros(h.begin(), h.end());
    int seen = 0;
    bool positive = true;
    for (std::size_t e = 0; e < cfg.size() && positive; ++e) {
      if (std::find(h.begin(), h.end(), e) != h.end()) continue;
      rows.back() = e;
      const int s = chirotope(cfg, rows);
      if (s == 0) {
        zeros.push_back(e);
      } else if (seen == 0) {
        seen = s;
      } else if (s != seen) {
        positive = false;
      }
    }
    if (!positive) return;
    std::sort(zeros.begin(), zeros.end());
    out.push_back(std::move(zeros));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_positive_circuit(const Matrix& rows) {
  if (rows.rows() != rows.cols() + 1) throw DimensionError("positive circuit test needs rows == cols + 1");
  if (rows.cols() == 0) return true;
  if (rank(rows) != rows.cols()) return false;
  const Vector v = kernel_vector(rows);
  // The first nonzero entry is normalized to +1.
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x > 0; });
}

Matrix alternating_dual_matrix(std::size_t n, std::size_t d) {
  if (d > n || n < 2) throw InputError("alternating_dual_matrix needs 2 <= n, d <= n");
  Matrix m(n - 1, n - d);
  for (std::size_t k = 2; k <= n; ++k) {
    Rational p = 1;
    for (std::size_t j = 1; j <= n - d; ++j, p *= static_cast<long>(k - 1)) m(k - 2, j - 1) = k % 2 == 0 ? p : Rational(-p);
  }
  return m;
}

}  // namespace ncp
