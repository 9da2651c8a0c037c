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

#include <gtest/gtest.h>

#include <sstream>

#include "cyclolat/cyclotomic.hpp"
#include "oracles.hpp"

using namespace cyclolat;

TEST(NumberTheory, PrimesAndTotient) {
  const std::vector<long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (long n = 0; n <= 41; ++n)
    EXPECT_EQ(is_prime(n), std::find(primes.begin(), primes.end(), n) != primes.end()) << n;
  for (long n = 1; n <= 60; ++n) {
    long count = 0;
    for (long k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

TEST(Squarefree, Decompose) {
  const auto d = squarefree_decompose(360);
  EXPECT_EQ(d.sqrt_m, 30);
  EXPECT_EQ(d.power, 12);
  EXPECT_EQ(d.primes(), (std::vector<long>{2, 3, 5}));
  EXPECT_FALSE(d.is_squarefree());
  EXPECT_TRUE(squarefree_decompose(105).is_squarefree());
  EXPECT_THROW(squarefree_decompose(1), std::invalid_argument);
}

TEST(Build, PrimeMatrix) {
  const auto v = build_prime(5);
  EXPECT_EQ(v.matrix, IntMatrix::from_rows({{1, 0, 0, 0, -1}, {0, 1, 0, 0, -1}, {0, 0, 1, 0, -1}, {0, 0, 0, 1, -1}}));
  EXPECT_THROW(build_prime(6), std::invalid_argument);
  const auto two = build(2);
  EXPECT_EQ(two.matrix, IntMatrix::from_rows({{1, -1}}));
  EXPECT_THROW(build(1), std::invalid_argument);
  EXPECT_THROW(build(0), std::invalid_argument);
}

TEST(Build, FifteenMatchesDisplayedMatrix) {
  // Rows of A_15 = A_3 (x) A_5 as printed alongside the m=15 polynomial.
  const auto expect = IntMatrix::from_rows({
      {1, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1},
      {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1},
      {0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1},
      {0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1},
      {0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, -1, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, -1, 1},
  });
  EXPECT_EQ(build(15).matrix, expect);
}

TEST(Build, TensorAndDirectSum) {
  const auto a = IntMatrix::from_rows({{1, -1}});
  const auto b = build_prime(3).matrix;
  EXPECT_EQ(tensor(a, b), IntMatrix::from_rows({{1, 0, -1, -1, 0, 1}, {0, 1, -1, 0, -1, 1}}));
  EXPECT_EQ(direct_sum(a, a), IntMatrix::from_rows({{1, -1, 0, 0}, {0, 0, 1, -1}}));
  EXPECT_EQ(direct_sum(IntMatrix(), a), a);
}

// Column c must be the image of zeta^labels[c] under one fixed unimodular
// change of basis from the power basis 1, zeta, ..., zeta^(phi-1).
class BuildBasis : public ::testing::TestWithParam<long> {};

TEST_P(BuildBasis, ColumnsRepresentRootsOfUnity) {
  const long m = GetParam();
  const auto v = build(m);
  const auto d = static_cast<std::size_t>(euler_phi(m));
  ASSERT_EQ(v.dim, d);
  ASSERT_EQ(v.count(), static_cast<std::size_t>(m));
  ASSERT_EQ(v.labels.size(), static_cast<std::size_t>(m));
  std::vector<long> sorted = v.labels;
  std::sort(sorted.begin(), sorted.end());
  for (long k = 0; k < m; ++k) ASSERT_EQ(sorted[static_cast<std::size_t>(k)], k);

  const auto phi = oracle::cyclotomic_poly(m);
  ASSERT_EQ(phi.size(), d + 1);
  std::vector<std::size_t> col_of(static_cast<std::size_t>(m));
  for (std::size_t c = 0; c < v.count(); ++c) col_of[static_cast<std::size_t>(v.labels[c])] = c;
  // T maps power-basis coordinates to the library's basis.
  IntMatrix t(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r) t(r, k) = v.matrix(r, col_of[k]);
  const BigInt dt = det(t);
  EXPECT_TRUE(dt == 1 || dt == -1) << "m=" << m;
  for (long k = 0; k < m; ++k) {
    const auto pc = oracle::power_coords(k, phi);
    for (std::size_t r = 0; r < d; ++r) {
      long s = 0;
      for (std::size_t j = 0; j < d; ++j) s += t(r, j) * pc[j];
      ASSERT_EQ(s, v.matrix(r, col_of[static_cast<std::size_t>(k)])) << "m=" << m << " k=" << k;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(UpTo42, BuildBasis, ::testing::Range(2L, 43L));

TEST(Build, NonSquarefreeIsBlockDiagonal) {
  for (long m : {4L, 9L, 12L, 18L, 20L, 36L}) {
    const auto dec = squarefree_decompose(m);
    const auto base = build(dec.sqrt_m).matrix;
    const auto v = build(m).matrix;
    IntMatrix expect;
    for (long k = 0; k < dec.power; ++k) expect = direct_sum(expect, base);
    EXPECT_EQ(v, expect) << m;
  }
}

TEST(Build, EntriesAreTernary) {
  for (long m = 2; m <= 60; ++m) {
    const auto v = build(m);
    for (auto x : v.matrix.data()) ASSERT_TRUE(x >= -1 && x <= 1) << m;
  }
}

TEST(MatrixText, RoundTrip) {
  const auto a = build(12).matrix;
  std::stringstream ss;
  write_matrix_text(ss, a);
  EXPECT_EQ(ss.str().substr(0, 5), "4 12\n");
  EXPECT_EQ(read_matrix_text(ss), a);
  std::istringstream bad("2 3\n1 2\n");
  EXPECT_THROW(read_matrix_text(bad), std::invalid_argument);
}
