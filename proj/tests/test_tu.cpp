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

#include <numeric>
#include <random>

#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/tu.hpp"
#include "oracles.hpp"

using namespace cyclolat;

namespace {

IntMatrix random_ternary(std::mt19937& rng, std::size_t r, std::size_t c, int zero_weight) {
  std::uniform_int_distribution<int> d(-1, 1 + zero_weight);
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const int x = d(rng);
      a(i, j) = x > 1 ? 0 : x;
    }
  return a;
}

// Network matrix of a random directed tree: TU by construction.
IntMatrix network_matrix(std::mt19937& rng, std::size_t nodes, std::size_t arcs) {
  std::vector<std::size_t> parent(nodes);
  for (std::size_t v = 1; v < nodes; ++v) parent[v] = rng() % v;
  auto path_to_root = [&](std::size_t v) {
    std::vector<std::size_t> p;
    while (v != 0) {
      p.push_back(v);
      v = parent[v];
    }
    return p;
  };
  IntMatrix a(nodes - 1, arcs);
  for (std::size_t c = 0; c < arcs; ++c) {
    const std::size_t u = rng() % nodes, w = rng() % nodes;
    // Tree edges are indexed by their child endpoint; the path u -> w uses
    // edges above u with +1 and edges above w with -1 below the meeting point.
    std::vector<int> mark(nodes, 0);
    for (auto e : path_to_root(u)) mark[e] += 1;
    for (auto e : path_to_root(w)) mark[e] -= 1;
    for (std::size_t e = 1; e < nodes; ++e) a(e - 1, c) = mark[e];
  }
  return a;
}

bool every_subset_splits(const IntMatrix& a) {
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << a.cols()); ++s) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if ((s >> j) & 1) cols.push_back(j);
    if (!check_split_criterion(a, cols)) return false;
  }
  return true;
}

}  // namespace

TEST(TU, AgreesWithBruteForceMinors) {
  std::mt19937 rng(21);
  int tu = 0, not_tu = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
    const auto a = random_ternary(rng, r, c, trial % 4);
    const bool expect = oracle::brute_tu(oracle::to_rows(a));
    const auto v = is_totally_unimodular(a);
    ASSERT_EQ(v.is_tu, expect);
    (expect ? tu : not_tu)++;
    if (!v.is_tu) {
      ASSERT_TRUE(v.submatrix.has_value());
      const auto& w = *v.submatrix;
      ASSERT_EQ(w.rows.size(), w.cols.size());
      const long d = oracle::cofactor_det(oracle::to_rows(a.submatrix(w.rows, w.cols)));
      EXPECT_EQ(w.det, d);
      EXPECT_GE(std::abs(d), 2);
    }
  }
  EXPECT_GT(tu, 50);
  EXPECT_GT(not_tu, 50);
}

TEST(TU, NetworkMatricesAreTU) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = network_matrix(rng, 2 + rng() % 6, 1 + rng() % 10);
    EXPECT_TRUE(is_totally_unimodular(a).is_tu);
    if (a.rows() <= 5) EXPECT_TRUE(oracle::brute_tu(oracle::to_rows(a)));
  }
}

TEST(TU, SplitCriterionOverAllSubsets) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 8;
    const auto a = random_ternary(rng, r, c, 1 + trial % 3);
    EXPECT_EQ(is_totally_unimodular(a).is_tu, every_subset_splits(a)) << "trial " << trial;
  }
}

TEST(Split, MatchesBruteForceSigning) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_ternary(rng, 1 + rng() % 5, 1 + rng() % 7, 1);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (rng() % 2) cols.push_back(j);
    if (cols.empty()) continue;
    const auto split = check_split_criterion(a, cols);
    ASSERT_EQ(split.has_value(), oracle::brute_split_exists(oracle::to_rows(a), cols));
    if (split) {
      ASSERT_EQ(split->size(), cols.size());
      EXPECT_EQ(split->front(), 1);
      for (std::size_t r = 0; r < a.rows(); ++r) {
        long s = 0;
        for (std::size_t i = 0; i < cols.size(); ++i) s += (*split)[i] * a(r, cols[i]);
        EXPECT_LE(std::abs(s), 1);
      }
    }
  }
}

TEST(TU, Metamorphic) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 2 + rng() % 6;
    const auto a = random_ternary(rng, r, c, 2);
    const bool base = is_totally_unimodular(a).is_tu;
    auto neg = a;
    const std::size_t j = rng() % c;
    for (std::size_t i = 0; i < r; ++i) neg(i, j) = -neg(i, j);
    EXPECT_EQ(is_totally_unimodular(neg).is_tu, base);
    std::vector<std::size_t> perm(c), rows(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(is_totally_unimodular(a.submatrix(rows, perm)).is_tu, base);
    EXPECT_EQ(is_totally_unimodular(a.transposed()).is_tu, base);
    // Appending an identity keeps the verdict.
    EXPECT_EQ(is_totally_unimodular(IntMatrix::hcat(a, IntMatrix::identity(r))).is_tu, base);
  }
}

TEST(TU, CyclotomicMatrices) {
  for (long m : {2L, 3L, 4L, 5L, 6L, 7L, 10L, 12L, 14L, 15L, 18L, 20L, 30L})
    EXPECT_TRUE(is_totally_unimodular(build(m).matrix).is_tu) << m;
}

TEST(TU, Errors) {
  EXPECT_THROW(is_totally_unimodular(IntMatrix::from_rows({{2, 0}})), std::invalid_argument);
  Budgets b;
  b.tu_max_cols = 10;
  EXPECT_THROW(is_totally_unimodular(build(15).matrix, b), BudgetExceeded);
  b = Budgets{};
  b.split_max_cols = 3;
  const std::size_t cols[] = {0, 1, 2, 3};
  EXPECT_THROW(check_split_criterion(build(15).matrix, cols, b), BudgetExceeded);
  EXPECT_TRUE(is_totally_unimodular(IntMatrix(3, 3)).is_tu);
  // A_21 is one 12 x 21 block, past the default minor budget.
  EXPECT_THROW(is_totally_unimodular(build(21).matrix), BudgetExceeded);
}

TEST(Certificate, ThreePQColumnsFailTheSplit) {
  for (auto [p, q] : {std::pair{5L, 7L}, std::pair{5L, 11L}, std::pair{7L, 11L}}) {
    const auto cols = tu_failure_certificate_3pq(p, q);
    const auto a = build(3 * p * q).matrix;
    const std::vector<std::size_t> c(cols.begin(), cols.end());
    EXPECT_FALSE(check_split_criterion(a, c).has_value());
    EXPECT_FALSE(oracle::brute_split_exists(oracle::to_rows(a), c));
  }
}

TEST(Certificate, ColumnPatterns) {
  const long p = 5, q = 7;
  const auto cols = tu_failure_certificate_3pq(p, q);
  const auto a = build(3 * p * q).matrix;
  const std::size_t half = static_cast<std::size_t>((p - 1) * (q - 1));
  ASSERT_EQ(a.rows(), 2 * half);
  auto col = [&](std::size_t c) {
    std::vector<long> v;
    for (std::size_t r = 0; r < a.rows(); ++r) v.push_back(std::abs(a(r, c)));
    return v;
  };
  // Zero block stacked on an all-ones block.
  std::vector<long> c1(2 * half, 0);
  std::fill(c1.begin() + static_cast<long>(half), c1.end(), 1);
  EXPECT_EQ(col(cols[0]), c1);
  // (u ; u) with u = (1_{q-1}, 0_{(p-2)(q-1)}), and (t ; t) with t = (1, 0_{q-2}) repeated.
  std::vector<long> u(half, 0), t(half, 0);
  for (long i = 0; i < q - 1; ++i) u[static_cast<std::size_t>(i)] = 1;
  for (long i = 0; i < p - 1; ++i) t[static_cast<std::size_t>(i * (q - 1))] = 1;
  auto stacked = [](std::vector<long> h) {
    auto s = h;
    s.insert(s.end(), h.begin(), h.end());
    return s;
  };
  EXPECT_EQ(col(cols[1]), stacked(u));
  EXPECT_EQ(col(cols[2]), stacked(t));
  // Entries within each column share one sign per half.
  for (std::size_t k = 1; k < 3; ++k)
    for (std::size_t r = 0; r < half; ++r) EXPECT_EQ(a(r, cols[k]), a(r + half, cols[k]));
}

TEST(Certificate, RejectsBadPrimes) {
  EXPECT_THROW(tu_failure_certificate_3pq(3, 5), std::invalid_argument);
  EXPECT_THROW(tu_failure_certificate_3pq(5, 5), std::invalid_argument);
  EXPECT_THROW(tu_failure_certificate_3pq(5, 9), std::invalid_argument);
}
