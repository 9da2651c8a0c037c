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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cyclolat/exact.hpp"

namespace cyclolat {

bool is_prime(long n);
/// Euler's totient.
long euler_phi(long n);

struct SquarefreeDecomposition {
  long m = 0;
  long sqrt_m = 0;  // product of the distinct primes dividing m
  long power = 0;   // m / sqrt_m
  std::vector<std::pair<long, int>> prime_factors;  // ascending primes

  std::vector<long> primes() const;
  bool is_squarefree() const { return power == 1; }
};

SquarefreeDecomposition squarefree_decompose(long m);

/// The generators of Z[zeta_m] as lattice vectors: column c of `matrix`
/// represents zeta_m^labels[c] in the fixed basis.
struct VertexMatrix {
  long m = 0;
  std::size_t dim = 0;
  IntMatrix matrix;
  std::vector<long> labels;

  std::size_t count() const { return matrix.cols(); }
};

/// [I_{p-1} | -1], columns labelled 0..p-1.
VertexMatrix build_prime(long p);

/// Block-diagonal [[A,0],[0,B]] on the column sets. An empty matrix is the
/// identity element.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// All Kronecker products a_i (x) b_j, ordered with i outer and j inner.
IntMatrix tensor(const IntMatrix& a, const IntMatrix& b);

/// The vertex matrix A_m. Primes of the squarefree part are taken in
/// ascending order, then the result is repeated m/sqrt(m) times on the
/// diagonal; block k holds zeta_m^k times the roots of unity of order
/// sqrt(m). Throws std::invalid_argument for m < 2.
VertexMatrix build(long m);

/// "d n" header followed by d rows of n integers.
void write_matrix_text(std::ostream& os, const IntMatrix& a);
IntMatrix read_matrix_text(std::istream& is);

}  // namespace cyclolat
