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

#include "cyclolat/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cyclolat {

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: entry count does not match rows*cols");
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  std::vector<std::int64_t> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return IntMatrix(rows.size(), cols, std::move(data));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> col_idx) const {
  IntMatrix s(rows_, col_idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(r, j) = (*this)(r, col_idx[j]);
  return s;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row counts differ");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

// ---------------------------------------------------------------- RatVector

RatVector::RatVector(std::vector<std::int64_t> numerators, std::int64_t denominator)
    : num_(std::move(numerators)), den_(denominator) {
  if (den_ == 0) throw std::invalid_argument("RatVector: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  std::int64_t g = den_;
  for (auto x : num_) g = gcd_abs(g, x);
  if (g > 1) {
    den_ /= g;
    for (auto& x : num_) x /= g;
  }
}

// ------------------------------------------------------------ IntPolynomial

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0 && !(is_zero() && i == 0)) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<BigInt> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_pow(const IntPolynomial& a, unsigned k) {
  IntPolynomial result{1};
  IntPolynomial base = a;
  while (k > 0) {
    if (k & 1u) result = poly_mul(result, base);
    k >>= 1u;
    if (k > 0) base = poly_mul(base, base);
  }
  return result;
}

bool is_palindromic(const IntPolynomial& a) {
  const auto& c = a.coeffs();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<BigInt> series_coeffs(const IntPolynomial& h, unsigned d, unsigned n_max) {
  if (d == 0) throw std::invalid_argument("series_coeffs: d must be positive");
  std::vector<BigInt> s(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    BigInt acc = 0;
    for (std::size_t j = 0; j <= std::min<std::size_t>(n, h.degree()); ++j) {
      acc += h[j] * binomial(static_cast<long>(n - j + d - 1), static_cast<long>(d - 1));
    }
    s[n] = acc;
  }
  return s;
}

BigInt det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = static_cast<long>(m.data()[i]);
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j));
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

// -------------------------------------------------------------------- small

namespace small {
namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("small integer elimination overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t det(std::span<const std::int64_t> in, std::size_t n) {
  if (n == 0) return 1;
  std::vector<std::int64_t> a(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(n * n));
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * n + c]; };
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(at(i, j)) * at(k, k) -
                     static_cast<__int128>(at(i, k)) * at(k, j);
        at(i, j) = checked(v / prev);
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

std::size_t rank(std::span<const std::int64_t> in, std::size_t rows, std::size_t cols) {
  std::vector<std::int64_t> a(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(rows * cols));
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(rank, j), at(p, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      std::int64_t g = 0;
      const std::int64_t f = at(i, c);
      const std::int64_t piv = at(rank, c);
      for (std::size_t j = c; j < cols; ++j) {
        at(i, j) = checked(static_cast<__int128>(at(i, j)) * piv -
                           static_cast<__int128>(f) * at(rank, j));
        g = gcd_abs(g, at(i, j));
      }
      if (g > 1)
        for (std::size_t j = c; j < cols; ++j) at(i, j) /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace small
}  // namespace cyclolat
