#pragma once

#include "ncp/exact.hpp"

#include <span>
#include <vector>

namespace ncp {

/// Rows of a matrix read as a vector configuration; rank = number of columns.
struct VectorConfiguration {
  Matrix rows;

  std::size_t size() const { return rows.rows(); }
  std::size_t rank() const { return rows.cols(); }
};

/// Rows (1, t_i, ..., t_i^(rank-1)). Parameters default to t_i = i (1-based)
/// and must be strictly increasing. Throws InputError if rank > n or the
/// parameters are not increasing.
VectorConfiguration cyclic_configuration(std::size_t n, std::size_t rank,
                                         std::span<const Rational> t = {});

/// The dual of the rank d+1 cyclic configuration on n points: rank n-d-1,
/// with every even-numbered (1-based) row negated.
VectorConfiguration dual_cyclic_configuration(std::size_t n, std::size_t d,
                                              std::span<const Rational> t = {});

/// Sign of the determinant of the rows in `subset`, taken in the given order.
/// Throws InputError unless |subset| equals the rank.
int chirotope(const VectorConfiguration& cfg, std::span<const std::size_t> subset);

/// Every increasing rank-subset has positive chirotope.
bool is_alternating(const VectorConfiguration& cfg);

/// Drops element i.
VectorConfiguration deletion(const VectorConfiguration& cfg, std::size_t i);

/// Chirotope of the contraction by element i: chi(i, subset...).
int contraction_chirotope(const VectorConfiguration& cfg, std::size_t i,
                          std::span<const std::size_t> subset);

/// Facets of the cyclic d-polytope on n vertices by Gale's evenness
/// criterion, as increasing 0-based d-subsets in lexicographic order.
std::vector<std::vector<std::size_t>> gale_evenness_facets(std::size_t n, std::size_t d);

/// C(n - ceil(d/2), floor(d/2)) + C(n - 1 - ceil((d-1)/2), floor((d-1)/2)).
std::int64_t cyclic_facet_count(std::size_t n, std::size_t d);

/// Zero sets of the positive cocircuits of a uniform-enough configuration:
/// the (rank-1)-subsets H of rank rank-1 with chi(H, e) of one sign for every
/// e outside H. Sorted lexicographically.
std::vector<std::vector<std::size_t>> positive_cocircuit_zero_sets(const VectorConfiguration& cfg);

/// The rows have rank rows-1 and their linear dependence has all
/// coefficients nonzero of one sign. Requires rows == cols + 1.
bool is_positive_circuit(const Matrix& rows);

/// The (n-1) x (n-d) matrix ((-1)^k (k-1)^(j-1)), 2 <= k <= n, 1 <= j <= n-d.
Matrix alternating_dual_matrix(std::size_t n, std::size_t d);

}  // namespace ncp
