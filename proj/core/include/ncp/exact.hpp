#pragma once

// Exact scalars and dense matrices. Nothing in ncp touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncp {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept in canonical form
using Vector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". The result is canonicalized.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

int sign(const Rational& q);
int sign(const Integer& z);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Binomial coefficient C(n, k) with C(n, k) = 0 for k < 0 or k > n.
/// Throws FormulaError if the value does not fit in 64 bits.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  // Bounds-checked; throws DimensionError.
  Rational& at(std::size_t r, std::size_t c);
  const Rational& at(std::size_t r, std::size_t c) const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix without_row(std::size_t r) const;
  Matrix transpose() const;

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free elimination. Throws DimensionError for
/// non-square input. The 0x0 determinant is 1.
Rational determinant(const Matrix& m);

/// Exact rank by fraction-free elimination.
std::size_t rank(const Matrix& m);

/// For m with rows == cols + 1 and full column rank, the unique (up to scale)
/// v with v^T m = 0, scaled so the first nonzero entry is +1.
/// Throws DimensionError on a shape mismatch and RankError on rank deficiency.
Vector kernel_vector(const Matrix& m);

namespace detail {

// Row-scales m to integers (each row by the lcm of its denominators).
// Returns the integer matrix row-major and the product of the scales.
std::vector<Integer> integer_rows(const Matrix& m, Integer& scale_product);

}  // namespace detail

}  // namespace ncp
