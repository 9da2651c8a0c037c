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

#include "cyclolat/growth.hpp"
#include "cyclolat/hull.hpp"
#include "oracles.hpp"

using namespace cyclolat;

TEST(Bfs, MatchesOracle) {
  const std::vector<std::pair<long, unsigned>> cases = {{2, 6}, {3, 6}, {4, 5}, {5, 4}, {6, 6}, {8, 4}, {9, 3},
                                                        {10, 4}, {12, 4}, {14, 3}, {15, 3}};
  for (auto [m, n] : cases) {
    const auto v = build(m);
    const auto s = bfs_shells(v, n);
    EXPECT_EQ(s.m, m);
    EXPECT_EQ(s.max_n, n);
    EXPECT_EQ(s.counts, oracle::bfs_shells(v.matrix, n)) << "m=" << m;
  }
}

TEST(Bfs, Hexagonal) {
  const auto s = bfs_shells(build(6), 10);
  EXPECT_EQ(s.counts[0], 1u);
  for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(s.counts[n], 6u * n);
}

TEST(Bfs, LineAndSquare) {
  EXPECT_EQ(bfs_shells(build(2), 4).counts, (std::vector<std::uint64_t>{1, 2, 2, 2, 2}));
  // Square lattice with the four unit steps: S(n) = 4n.
  EXPECT_EQ(bfs_shells(build(4), 3).counts, (std::vector<std::uint64_t>{1, 4, 8, 12}));
}

TEST(Bfs, WidePackedKeys) {
  // Twelve coordinates with a long walk need more than 64 packed bits.
  IntMatrix g(12, 2);
  for (std::size_t r = 0; r < 12; ++r) {
    g(r, 0) = 1;
    g(r, 1) = r % 2 ? -1 : 1;
  }
  const auto s = bfs_shells(g, 100);
  EXPECT_EQ(s.counts, oracle::bfs_shells(g, 100));
  for (unsigned n = 1; n <= 100; ++n) EXPECT_EQ(s.counts[n], n + 1);
}

TEST(Bfs, BudgetKeepsPartialShells) {
  Budgets b;
  b.bfs_max_points = 50;
  try {
    bfs_shells(build(6), 10, b);
    FAIL() << "expected budget exhaustion";
  } catch (const BfsBudgetExceeded& e) {
    const auto& p = e.partial();
    ASSERT_GE(p.counts.size(), 2u);
    for (std::size_t n = 1; n < p.counts.size(); ++n) EXPECT_EQ(p.counts[n], 6u * n);
    EXPECT_LT(p.counts.size(), 11u);
  }
  EXPECT_THROW(bfs_shells(IntMatrix::from_rows({{2, -1}}), 2), std::invalid_argument);
}

TEST(Bfs, FiniteDifferencesVanish) {
  // S(n) agrees with a polynomial of degree d-1 once n >= deg h, so the d-th
  // forward difference vanishes from there on.
  for (long m : {6L, 10L, 12L}) {
    const auto v = build(m);
    const unsigned d = static_cast<unsigned>(v.dim);
    const unsigned n = 2 * d + 2;
    auto s = bfs_shells(v, n).counts;
    std::vector<long> diff(s.begin(), s.end());
    for (unsigned k = 0; k < d; ++k)
      for (std::size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
    for (std::size_t i = d; i + d < s.size(); ++i) EXPECT_EQ(diff[i], 0) << "m=" << m << " i=" << i;
  }
}

TEST(Fit, RecoversPolynomial) {
  EXPECT_EQ(fit_polynomial(bfs_shells(build(6), 2), 2), IntPolynomial({1, 4, 1}));
  EXPECT_EQ(fit_polynomial(bfs_shells(build(10), 4), 4), IntPolynomial({1, 6, 16, 6, 1}));
  EXPECT_EQ(fit_polynomial(bfs_shells(build(7), 6), 6), IntPolynomial({1, 1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(fit_polynomial(bfs_shells(build(6), 1), 2), std::invalid_argument);
}

TEST(Fit, ShellsMatchPolynomial) {
  const auto s = bfs_shells(build(12), 5);
  EXPECT_TRUE(shells_match_polynomial(s, poly_pow(IntPolynomial({1, 4, 1}), 2), 4));
  EXPECT_FALSE(shells_match_polynomial(s, IntPolynomial({1, 4, 1}), 4));
}

TEST(Dilates, CountsAgainstBruteForce) {
  for (long m : {3L, 4L, 6L}) {
    const auto v = build(m);
    const auto fs = enumerate_facets(v);
    for (std::int64_t k = 0; k <= 3; ++k) {
      std::uint64_t expect = 0;
      const std::size_t d = v.dim;
      std::vector<std::int64_t> x(d, -k);
      while (true) {
        if (contains_point(fs, IntVector(x), k)) ++expect;
        std::size_t i = 0;
        while (i < d && x[i] == k) x[i++] = -k;
        if (i == d) break;
        ++x[i];
      }
      EXPECT_EQ(dilate_point_count(fs, d, k), expect) << "m=" << m << " k=" << k;
    }
  }
  Budgets b;
  b.dilate_max_candidates = 10;
  EXPECT_THROW(dilate_point_count(enumerate_facets(build(6)), 2, 3, b), BudgetExceeded);
}

TEST(Normality, SmallCases) {
  for (long m : {3L, 4L, 5L, 6L, 10L, 12L}) {
    const auto v = build(m);
    const auto r = normality_check(v, enumerate_facets(v), 3);
    EXPECT_TRUE(r.normal) << m;
    ASSERT_EQ(r.ball_sizes.size(), 4u);
    EXPECT_EQ(r.ball_sizes, r.dilate_counts);
  }
  // A lattice polygon whose second dilate has a point no 2-step word reaches.
  VertexMatrix odd{0, 2, IntMatrix::from_rows({{1, -1, 1, -1}, {1, 1, -1, -1}}), {}};
  const auto r = normality_check(odd, enumerate_facets(odd.matrix), 2);
  EXPECT_FALSE(r.normal);
}

TEST(ShellsCsv, Format) {
  std::ostringstream os;
  write_shells_csv(os, bfs_shells(build(6), 3));
  EXPECT_EQ(os.str(), "n,count\n0,1\n1,6\n2,12\n3,18\n");
}
