#include "ncp/exact.hpp"

#include "ncp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace ncp {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// In-place fraction-free (Bareiss) elimination to row echelon form.
// Returns the rank; `sign_flips` counts row swaps. When the matrix is square
// and of full rank, a(n-1, n-1) ends up holding the determinant up to sign.
std::size_t bareiss(std::vector<Integer>& a, std::size_t rows, std::size_t cols,
                    int& sign_flips) {
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };
  Integer prev = 1;
  std::size_t r = 0;
  sign_flips = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
      ++sign_flips;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(t);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  if (negative) p = -p;
  Rational result(p, q);
  result.canonicalize();
  return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i after the multiplication.
    std::int64_t next = 0;
    if (__builtin_mul_overflow(result, n - k + i, &next)) {
      throw FormulaError("binomial overflow");
    }
    result = next / i;
  }
  return result;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Rational& Matrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return (*this)(r, c);
}

const Rational& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return (*this)(r, c);
}

std::span<const Rational> Matrix::row(std::size_t r) const {
  if (r >= rows_) throw DimensionError("row index out of range");
  return {entries_.data() + r * cols_, cols_};
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix m(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto src = row(indices[i]);
    std::copy(src.begin(), src.end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
  return m;
}

Matrix Matrix::without_row(std::size_t r) const {
  if (r >= rows_) throw DimensionError("row index out of range");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != r) keep.push_back(i);
  return select_rows(keep);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product: inner dimensions differ");
  Matrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += (*this)(i, k) * rhs(k, j);
    }
  return p;
}

namespace detail {

std::vector<Integer> integer_rows(const Matrix& m, Integer& scale_product) {
  std::vector<Integer> a(m.rows() * m.cols());
  scale_product = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer v = m(r, c).get_num() * (l / m(r, c).get_den());
      a[r * m.cols() + c] = std::move(v);
    }
    scale_product *= l;
  }
  return a;
}

}  // namespace detail

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer scale;
  auto a = detail::integer_rows(m, scale);
  int flips = 0;
  if (bareiss(a, n, n, flips) < n) return 0;
  Rational det(a[n * n - 1], scale);
  det.canonicalize();
  return flips % 2 == 0 ? det : Rational(-det);
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Integer scale;
  auto a = detail::integer_rows(m, scale);
  int flips = 0;
  return bareiss(a, m.rows(), m.cols(), flips);
}

Vector kernel_vector(const Matrix& m) {
  if (m.rows() != m.cols() + 1) throw DimensionError("kernel_vector expects rows == cols + 1");
  if (rank(m) != m.cols()) throw RankError("kernel_vector: matrix is rank deficient");
  // Cofactor expansion of det[m | m_{*,j}] = 0 gives v_i = (-1)^i det(m without row i).
  Vector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational d = determinant(m.without_row(i));
    v[i] = i % 2 == 0 ? d : Rational(-d);
  }
  const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  const Rational scale = *first;
  for (auto& x : v) x /= scale;
  return v;
}

}  // namespace ncp
