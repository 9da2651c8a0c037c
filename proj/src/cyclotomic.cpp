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

#include "cyclolat/cyclotomic.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace cyclolat {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> SquarefreeDecomposition::primes() const {
  std::vector<long> out;
  for (auto [p, e] : prime_factors) out.push_back(p);
  return out;
}

SquarefreeDecomposition squarefree_decompose(long m) {
  if (m < 2) throw std::invalid_argument("squarefree_decompose: m must be at least 2");
  SquarefreeDecomposition d;
  d.m = m;
  d.sqrt_m = 1;
  long rest = m;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    d.prime_factors.emplace_back(p, e);
    d.sqrt_m *= p;
  }
  if (rest > 1) {
    d.prime_factors.emplace_back(rest, 1);
    d.sqrt_m *= rest;
  }
  d.power = m / d.sqrt_m;
  return d;
}

VertexMatrix build_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("build_prime: " + std::to_string(p) + " is not prime");
  const auto d = static_cast<std::size_t>(p - 1);
  IntMatrix a(d, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    a(i, i) = 1;
    a(i, d) = -1;
  }
  VertexMatrix v{p, d, std::move(a), {}};
  for (long i = 0; i < p; ++i) v.labels.push_back(i);
  return v;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

IntMatrix tensor(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const std::size_t col = i * b.cols() + j;
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t s = 0; s < b.rows(); ++s) out(r * b.rows() + s, col) = a(r, i) * b(s, j);
    }
  return out;
}

VertexMatrix build(long m) {
  if (m < 2) throw std::invalid_argument("build: m must be at least 2 (got " + std::to_string(m) + ")");
  const auto dec = squarefree_decompose(m);

  // Squarefree core: tensor product over ascending primes. Labels are
  // exponents of zeta_{sqrt m}; a column with factor indices (i_1..i_k)
  // represents prod zeta_{p_j}^{i_j}.
  IntMatrix core;
  std::vector<long> core_labels;
  long so_far = 1;
  for (long p : dec.primes()) {
    auto vp = build_prime(p);
    if (core.empty()) {
      core = vp.matrix;
      core_labels = vp.labels;
    } else {
      std::vector<long> next;
      next.reserve(core_labels.size() * vp.labels.size());
      for (long a : core_labels)
        for (long b : vp.labels) next.push_back((a * p + b * so_far) % (so_far * p));
      core = tensor(core, vp.matrix);
      core_labels = std::move(next);
    }
    so_far *= p;
  }

  VertexMatrix v;
  v.m = m;
  for (long k = 0; k < dec.power; ++k) {
    v.matrix = direct_sum(v.matrix, core);
    for (long e : core_labels) v.labels.push_back((k + e * dec.power) % m);
  }
  v.dim = v.matrix.rows();
  return v;
}

void write_matrix_text(std::ostream& os, const IntMatrix& a) {
  os << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? " " : "") << a(r, c);
    os << '\n';
  }
}

IntMatrix read_matrix_text(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw std::invalid_argument("matrix text: missing \"d n\" header");
  std::vector<std::int64_t> data(rows * cols);
  for (auto& x : data)
    if (!(is >> x)) throw std::invalid_argument("matrix text: too few entries");
  return IntMatrix(rows, cols, std::move(data));
}

}  // namespace cyclolat
