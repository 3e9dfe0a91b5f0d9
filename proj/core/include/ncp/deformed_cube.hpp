#pragma once

#include "ncp/polytope.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ncp {

/// The 2n inequalities
///   s*eps*x_k + (-1)^k sum_{j<k} C(k-2, j-1) x_j <= 2^C(k,2) / eps^(k-1),
/// for k = 1..n and s = -1, +1 (the minus side first). Inequality 2(k-1)
/// is the minus side of coordinate k (0-based index k-1), 2(k-1)+1 the plus
/// side. Throws InputError unless 0 < eps <= 1 and n >= 1.
HPolytope build_deformed_cube(std::size_t n, const Rational& eps);

/// The 2^n vertices, obtained by forward substitution from the tight
/// inequalities, labeled by their sign choices. Vertex i has label
/// SignVector::from_bits(n, i).
VPolytope deformed_cube_vertices(std::size_t n, const Rational& eps);

/// Checks with the brute-force vertex enumerator that h has 2^n vertices,
/// that each is cut out by exactly one inequality of every pair with a
/// distinct sign choice, and hence that its facet-vertex incidences are those
/// of the n-cube.
bool verify_combinatorial_cube(const HPolytope& h);

/// The n x (n-d) matrix with a_kj = 0 (j > k), sigma_k*eps (j = k),
/// (-1)^k C(k-2, j-1) (j < k), indices 1-based.
Matrix sigma_matrix(const SignVector& sigma, std::size_t d, const Rational& eps);

/// True iff for every sign vector and every (n-d)-subset of the rows 2..n,
/// the minor at eps is nonzero with the sign it has at eps = 0. Only the sign
/// patterns of diagonal entries inside the chosen rows are enumerated.
bool certify_epsilon(std::size_t n, std::size_t d, const Rational& eps);

/// Largest eps in 1/2, 1/4, 1/8, ... passing certify_epsilon.
Rational choose_epsilon(std::size_t n, std::size_t d);

/// Keeps the last d coordinates. Labels are carried along. Throws
/// SkeletonViolation if two points collide.
VPolytope project_last(const VPolytope& v, std::size_t d);

/// project_last(deformed_cube_vertices(n, eps), d).
VPolytope projected_cube(std::size_t n, std::size_t d, const Rational& eps);

/// Index sets alternating between odd and even values once sorted.
bool is_alternating(std::span<const std::size_t> sorted_indices);

/// A longest alternating subsequence of an increasing index list (greedy:
/// keep every element whose parity differs from the last one kept).
std::vector<std::size_t> longest_alternating_subset(std::span<const std::size_t> sorted_indices);

}  // namespace ncp
