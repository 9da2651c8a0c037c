// Copyright 2026 The cyclolat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclolat {

using BigInt = mpz_class;

/// Dense integer vector. Lattice vectors in this library have tiny entries,
/// so storage is 64-bit; anything that can grow (determinants, polynomial
/// coefficients) is computed in BigInt.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim, std::int64_t fill = 0) : entries_(dim, fill) {}
  IntVector(std::initializer_list<std::int64_t> init) : entries_(init) {}
  explicit IntVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  std::span<const std::int64_t> entries() const { return entries_; }

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major);
  /// Builds from nested rows; all rows must have the same length.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  IntVector column(std::size_t c) const;
  std::span<const std::int64_t> data() const { return data_; }

  IntMatrix transposed() const;
  /// Submatrix on the given (ordered) row and column indices.
  IntMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;
  /// Matrix whose columns are the given columns of this matrix, in order.
  IntMatrix select_columns(std::span<const std::size_t> col_idx) const;
  /// Horizontal concatenation; row counts must agree.
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Rational vector stored as integer numerators over a common positive
/// denominator, always reduced so that gcd(numerators, denominator) = 1.
class RatVector {
 public:
  RatVector() = default;
  RatVector(std::vector<std::int64_t> numerators, std::int64_t denominator);

  std::size_t dim() const { return num_.size(); }
  std::span<const std::int64_t> numerators() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integral() const { return den_ == 1; }

  friend bool operator==(const RatVector&, const RatVector&) = default;
  friend auto operator<=>(const RatVector&, const RatVector&) = default;

 private:
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

/// Dense integer polynomial, coefficient i is the coefficient of x^i.
/// The zero polynomial is stored as the single coefficient 0.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  BigInt eval(const BigInt& x) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return poly_mul(a, b); }
IntPolynomial poly_pow(const IntPolynomial& a, unsigned k);
bool is_palindromic(const IntPolynomial& a);

/// Coefficients S(0..n_max) of h(x) / (1 - x)^d.
std::vector<BigInt> series_coeffs(const IntPolynomial& h, unsigned d, unsigned n_max);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for non-square input.
BigInt det(const IntMatrix& m);

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

// Small-matrix helpers for hot paths whose entries are known to be tiny.
// They throw std::overflow_error if an intermediate leaves the 64-bit range.
namespace small {

/// Determinant of an n x n row-major matrix.
std::int64_t det(std::span<const std::int64_t> a, std::size_t n);
/// Rank of a rows x cols row-major matrix.
std::size_t rank(std::span<const std::int64_t> a, std::size_t rows, std::size_t cols);

}  // namespace small

std::int64_t gcd_abs(std::int64_t a, std::int64_t b);

}  // namespace cyclolat
