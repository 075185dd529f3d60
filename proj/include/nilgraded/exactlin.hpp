#pragma once

// Exact rational scalars and the dense linear algebra the rest of the
// library runs on. Nothing here touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilgraded {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Scalar = mpq_class;

/// Coordinate tuple in a fixed basis (index 0 is the first basis element).
using Vec = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q". Throws InputError on anything else or on a zero
/// denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);

  static Mat identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Mat transposed() const;
  bool is_zero() const;

  Vec apply(const Vec& x) const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with its pivot columns (ascending).
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Mat m);

std::size_t rank(const Mat& m);

/// Basis of the right null space, one vector per free column in ascending
/// order; the free coordinate is 1 and the other free coordinates are 0.
std::vector<Vec> kernel_basis(const Mat& m);

/// Some x with a*x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Throws InputError when `p` is singular or not square.
Mat inverse(const Mat& p);

/// Reduced echelon basis of the span of `vectors` (each of length `dim`).
std::vector<Vec> span_basis(std::size_t dim, const std::vector<Vec>& vectors);

/// Dimension of the span of `vectors`.
std::size_t span_rank(std::size_t dim, const std::vector<Vec>& vectors);

/// True iff `v` lies in the span of `basis`.
bool in_span(std::size_t dim, const std::vector<Vec>& basis, const Vec& v);

}  // namespace nilgraded
