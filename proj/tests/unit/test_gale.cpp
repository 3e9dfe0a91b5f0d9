#include "ncp/deformed_cube.hpp"
#include "ncp/errors.hpp"
#include "ncp/gale.hpp"
#include "ncp/oriented_matroid.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <set>

using namespace ncp;

namespace {

std::int64_t pow2(std::size_t k) { return std::int64_t{1} << k; }

// The criterion restated on a sign vector s in {-,0,+}^n, written
// independently of the library: walk the leading nonzero run, then check
// the zero runs between later nonzeros.
bool criterion_reference(const SignVector& s, std::size_t d) {
  const std::size_t n = s.size();
  std::vector<std::size_t> nz;  // 1-based
  for (std::size_t k = 0; k < n; ++k)
    if (s[k] != Sign::Zero) nz.push_back(k + 1);
  if (nz.size() != n - d + 1) return false;
  std::size_t p = 0;
  while (p < n && s[p] != Sign::Zero) ++p;
  std::vector<std::size_t> tail(nz.begin() + static_cast<std::ptrdiff_t>(p), nz.end());
  for (std::size_t i = 1; i < tail.size(); ++i)
    if ((tail[i] - tail[i - 1]) % 2 == 0) return false;  // odd number of zeroes between
  if (p == 0) {
    for (std::size_t i = 1; i < nz.size(); ++i)
      if ((nz[i] - nz[i - 1]) % 2 == 0) return false;
    return true;
  }
  for (std::size_t i = 1; i < p; ++i)
    if (to_int(s[i - 1]) != (i % 2 == 1 ? -1 : 1)) return false;
  if (tail.empty()) return true;
  if (tail.front() <= p + 1) return false;
  const int sigma = to_int(s[p - 1]);
  const int expected = (p + 1) % 2 == 0 ? 1 : -1;
  const bool even = (tail.front() - p) % 2 == 0;
  return (sigma == expected) == even;
}

// Every signed (n-d+1)-set as a sign vector.
std::vector<SignVector> all_candidates(std::size_t n, std::size_t d) {
  std::vector<SignVector> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    SignVector s(n);
    std::size_t c = code, nonzero = 0;
    for (std::size_t k = 0; k < n; ++k, c /= 3) {
      s[k] = static_cast<Sign>(static_cast<int>(c % 3) - 1);
      nonzero += s[k] != Sign::Zero;
    }
    if (nonzero == n - d + 1) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(SignedIndexSet, Basics) {
  const SignedIndexSet a(6, {5, -1, 2});
  EXPECT_EQ(a.elements(), (std::vector<int>{-1, 2, 5}));
  EXPECT_EQ(a.support(), (std::vector<std::size_t>{1, 2, 5}));
  EXPECT_EQ(a.prefix_length(), 2u);
  EXPECT_EQ(a.sign_at(2), Sign::Plus);
  EXPECT_EQ(a.sign_at(3), Sign::Zero);
  EXPECT_EQ(a.to_string(), "{-1,+2,+5}");
  EXPECT_EQ(SignedIndexSet(6, {3, 4}).prefix_length(), 0u);
  EXPECT_THROW(SignedIndexSet(4, {2, -2}), InputError);
  EXPECT_THROW(SignedIndexSet(4, {5}), InputError);
}

TEST(SignedIndexSet, SignVectorRoundTrip) {
  EXPECT_EQ(to_sign_vector(SignedIndexSet(6, {-1, 2, 5})).to_string(), "-+00+0");
  EXPECT_EQ(to_sign_vector(SignedIndexSet(6, {-1, 4, 5})).to_string(), "-00++0");
  EXPECT_EQ(to_sign_vector(SignedIndexSet(6, {-1, -2, 4})).to_string(), "--0+00");
  const SignedIndexSet a(7, {-2, 3, -6});
  EXPECT_EQ(from_sign_vector(to_sign_vector(a)), a);
}

TEST(GaleEven, Predicate) {
  const std::vector<std::size_t> a{1, 2, 5, 8}, b{1, 3};
  EXPECT_TRUE(is_gale_even(a));
  EXPECT_FALSE(is_gale_even(b));
}

TEST(FacetsGale, SurgeryFacetsAreListed) {
  std::set<std::string> names;
  for (const auto& a : facets_gale(6, 4)) names.insert(to_sign_vector(a).to_string());
  EXPECT_TRUE(names.contains("-+00+0"));
  EXPECT_TRUE(names.contains("-00++0"));
  EXPECT_TRUE(names.contains("--0+00"));
}

TEST(FacetsGale, Counts) {
  for (std::size_t d = 2; d <= 8; ++d) EXPECT_EQ(facets_gale(d, d).size(), 2 * d);
  EXPECT_EQ(facets_gale(6, 4).size(), 64u);
  EXPECT_EQ(facets_gale(6, 2).size(), 64u);
  EXPECT_THROW(facets_gale(3, 4), InputError);
}

TEST(FacetsGale, SortedBySignVector) {
  const auto facets = facets_gale(7, 4);
  for (std::size_t i = 1; i < facets.size(); ++i) EXPECT_LT(to_sign_vector(facets[i - 1]), to_sign_vector(facets[i]));
}

TEST(FacetsGale, MatchesReferenceCriterion) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t d = 2; d <= n; ++d) {
      std::set<SignVector> expected;
      for (const auto& s : all_candidates(n, d))
        if (criterion_reference(s, d)) expected.insert(s);
      std::set<SignVector> got;
      for (const auto& a : facets_gale(n, d)) got.insert(to_sign_vector(a));
      EXPECT_EQ(got, expected) << n << "," << d;
    }
}

TEST(FacetFormula, ClosedFormsAgree) {
  for (std::size_t n = 2; n <= 14; ++n)
    for (std::size_t d = 2; d <= n; ++d) {
      const auto a = f_formula_shifted_sum(n, d);
      EXPECT_EQ(a, f_formula_binomial_sum(n, d)) << n << "," << d;
      EXPECT_EQ(a, f_formula_parity_split(n, d)) << n << "," << d;
      EXPECT_EQ(a, f_formula(n, d));
    }
}

TEST(FacetFormula, SpecialEvaluations) {
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_EQ(f_formula(n, 2), pow2(n));
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(f_formula(n, 3), pow2(n) - 2);
  for (std::size_t n = 4; n <= 12; ++n) EXPECT_EQ(f_formula(n, 4), static_cast<std::int64_t>(n - 2) * pow2(n - 2));
  for (std::size_t n = 5; n <= 12; ++n)
    EXPECT_EQ(f_formula(n, 5), static_cast<std::int64_t>(n - 4) * pow2(n - 2) + 2);
  for (std::size_t d = 2; d <= 12; ++d) {
    const auto dd = static_cast<std::int64_t>(d);
    EXPECT_EQ(f_formula(d, d), 2 * dd);
    EXPECT_EQ(f_formula(d + 1, d), dd * dd + dd + 2 * (dd / 2));
  }
}

TEST(FacetFormula, MatchesEnumeration) {
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t d = 2; d <= n; ++d)
      EXPECT_EQ(static_cast<std::int64_t>(facets_gale(n, d).size()), f_formula(n, d)) << n << "," << d;
}

TEST(CircuitQuery, FillsPlusOutsideSupport) {
  const auto q = circuit_query(SignedIndexSet(6, {-1, 2, 5}));
  EXPECT_EQ(q.sigma.to_string(), "-+++++");
  EXPECT_EQ(q.rows, (std::vector<std::size_t>{0, 1, 4}));
}

TEST(PositiveCircuit, SquareCaseIsVacuous) {
  const std::vector<std::size_t> row{2};
  EXPECT_TRUE(is_positive_circuit(SignVector(4, Sign::Plus), row, 4, Rational(1, 2)));
  const std::vector<std::size_t> two{0, 1};
  EXPECT_THROW(is_positive_circuit(SignVector(4, Sign::Plus), two, 4, Rational(1, 2)), InputError);
}

TEST(PositiveCircuit, EquivalentToCriterion) {
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t d = 2; d <= n; ++d) {
      const Rational eps = choose_epsilon(n, d);
      std::set<SignVector> facets;
      for (const auto& a : facets_gale(n, d)) facets.insert(to_sign_vector(a));
      for (const auto& s : all_candidates(n, d)) {
        const auto q = circuit_query(from_sign_vector(s));
        EXPECT_EQ(is_positive_circuit(q.sigma, q.rows, d, eps), facets.contains(s)) << n << "," << d << " " << s.to_string();
      }
    }
}

TEST(PositiveCircuit, AlternatingDualRows) {
  // Rows k of the dual matrix carry the sign (-1)^k, so a row subset is a
  // positive circuit exactly when its row numbers alternate in parity.
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t d = 2; d < n; ++d) {
      const Matrix b = alternating_dual_matrix(n, d);
      const std::size_t m = n - d + 1;
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
        std::vector<std::size_t> rows, ks;
        for (std::size_t i = 0; i < n - 1; ++i)
          if ((mask >> i) & 1) rows.push_back(i), ks.push_back(i + 2);
        EXPECT_EQ(is_positive_circuit(b.select_rows(rows)), is_alternating(ks));
      }
    }
}

TEST(BoundaryFaces, FVectors) {
  EXPECT_EQ(gale_fvector(6, 4), (FVector{64, 192, 192, 64}));
  EXPECT_EQ(gale_fvector(6, 5), (FVector{64, 192, 232, 136, 34}));
  EXPECT_EQ(gale_fvector(4, 4), (FVector{16, 32, 24, 8}));
}

TEST(BoundaryFaces, FiveCubeIntoFourSpace) {
  // f0 = 32 and f3 = 24 known; a cubical 3-sphere has f2 = 6 f3 / 2 and
  // Euler characteristic zero.
  const std::int64_t f0 = 32, f3 = 24, f2 = 3 * f3, f1 = f0 + f2 - f3;
  EXPECT_EQ(gale_fvector(5, 4), (FVector{f0, f1, f2, f3}));
}
