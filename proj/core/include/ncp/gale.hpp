#pragma once

#include "ncp/polytope.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ncp {

/// A set of signed indices from {+-1, ..., +-n}, never containing both k and
/// -k. Elements are kept sorted by absolute value.
class SignedIndexSet {
public:
  SignedIndexSet() = default;
  SignedIndexSet(std::size_t n, std::vector<int> elements);

  std::size_t n() const noexcept { return n_; }
  const std::vector<int>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Absolute values, increasing.
  std::vector<std::size_t> support() const;
  /// Sign of k in the set, or Zero if +-k is absent (k is 1-based).
  Sign sign_at(std::size_t k) const;
  /// min{i >= 0 : +-(i+1) not in the set}.
  std::size_t prefix_length() const;

  /// e.g. "{-1,+2,+5}"
  std::string to_string() const;

  friend bool operator==(const SignedIndexSet&, const SignedIndexSet&) = default;

private:
  std::size_t n_ = 0;
  std::vector<int> elements_;
};

/// Gaps between consecutive members of an increasing index list are all even.
bool is_gale_even(std::span<const std::size_t> sorted_support);

/// The cubical evenness predicate for a candidate facet label of C_d^n:
/// |alpha| = n-d+1 and the prefix/gap/parity conditions on alpha.
bool satisfies_cubical_gale(const SignedIndexSet& alpha, std::size_t d);

/// All facet labels of C_d^n, in lexicographic order of their sign vectors
/// (- < 0 < +).
std::vector<SignedIndexSet> facets_gale(std::size_t n, std::size_t d);

/// Position k carries the sign of +-k in alpha, zero elsewhere.
SignVector to_sign_vector(const SignedIndexSet& alpha);
SignedIndexSet from_sign_vector(const SignVector& v);

/// Rows (0-based) of A(sigma) for an n x (n-d) sigma_matrix selected by
/// `rows` are a positive circuit: rank n-d and the one linear dependence has
/// all coefficients nonzero of one sign. Throws InputError unless
/// |rows| = n-d+1.
bool is_positive_circuit(const SignVector& sigma, std::span<const std::size_t> rows,
                         std::size_t d, const Rational& eps);

/// The sign vector (+ outside the support) and row set a label induces.
struct CircuitQuery {
  SignVector sigma;
  std::vector<std::size_t> rows;  // 0-based
};
CircuitQuery circuit_query(const SignedIndexSet& alpha);

/// Facet count f(n, d). Evaluates the three closed forms and throws
/// FormulaError if they disagree.
std::int64_t f_formula(std::size_t n, std::size_t d);

/// The individual closed forms, exposed for testing.
std::int64_t f_formula_shifted_sum(std::size_t n, std::size_t d);
std::int64_t f_formula_binomial_sum(std::size_t n, std::size_t d);
std::int64_t f_formula_parity_split(std::size_t n, std::size_t d);

/// Faces of the boundary complex spanned by the given cube faces (every
/// subface of a facet), grouped by dimension 0..d-1, each group sorted.
std::vector<std::vector<SignVector>> boundary_faces(std::span<const SignVector> facets,
                                                    std::size_t d);

/// f-vector of C_d^n derived purely from facets_gale.
FVector gale_fvector(std::size_t n, std::size_t d);

}  // namespace ncp
