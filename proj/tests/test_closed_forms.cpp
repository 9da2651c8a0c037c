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

#include "cyclolat/closed_forms.hpp"
#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/growth.hpp"
#include "oracles.hpp"

using namespace cyclolat;

namespace {

IntPolynomial lift(const std::vector<long>& c) { return IntPolynomial(std::vector<BigInt>(c.begin(), c.end())); }

}  // namespace

TEST(ClosedForms, Prime) {
  EXPECT_EQ(h_prime(2), IntPolynomial({1, 1}));
  EXPECT_EQ(h_prime(3), IntPolynomial({1, 1, 1}));
  EXPECT_EQ(h_prime(41).coeffs().size(), 41u);
  EXPECT_THROW(h_prime(9), std::invalid_argument);
}

TEST(ClosedForms, TwoPRows) {
  EXPECT_EQ(h_two_p(3), IntPolynomial({1, 4, 1}));
  EXPECT_EQ(h_two_p(5), IntPolynomial({1, 6, 16, 6, 1}));
  EXPECT_EQ(h_two_p(7), IntPolynomial({1, 8, 29, 64, 29, 8, 1}));
  EXPECT_EQ(h_two_p(11), IntPolynomial({1, 12, 67, 232, 562, 1024, 562, 232, 67, 12, 1}));
  EXPECT_EQ(h_two_p(13)[6], 4096);
  EXPECT_EQ(h_two_p(17)[8], 65536);
  EXPECT_EQ(h_two_p(19)[9], 262144);
  EXPECT_THROW(h_two_p(2), std::invalid_argument);
}

TEST(ClosedForms, TwoPAgainstBfs) {
  for (long p : {3L, 5L, 7L}) {
    const auto v = build(2 * p);
    const unsigned d = static_cast<unsigned>(v.dim);
    const auto s = bfs_shells(v, d).counts;
    const auto h = h_two_p(p);
    std::vector<long> hc;
    for (const auto& c : h.coeffs()) hc.push_back(c.get_si());
    for (unsigned n = 0; n <= d; ++n) EXPECT_EQ(oracle::series_at(hc, d, n), s[n]) << "p=" << p << " n=" << n;
  }
}

TEST(ClosedForms, FacetAndFaceCounts) {
  EXPECT_EQ(facet_count_2p(3), 6);
  EXPECT_EQ(facet_count_2p(5), 30);
  EXPECT_EQ(facet_count_2p(7), 140);
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
    // Simplicial, so h(1) counts facets.
    EXPECT_EQ(h_two_p(p).eval(1), facet_count_2p(p)) << p;
    for (long k = 1; k <= (p - 1) / 2; ++k) EXPECT_EQ(face_count_2p(p, k), oracle::choose(p, k) * (1L << k));
  }
  EXPECT_THROW(face_count_2p(5, 3), std::invalid_argument);
  EXPECT_THROW(face_count_2p(5, 0), std::invalid_argument);
}

TEST(ClosedForms, Fifteen) {
  EXPECT_EQ(h_fifteen(), IntPolynomial({1, 7, 28, 79, 130, 79, 28, 7, 1}));
  EXPECT_EQ(h_fifteen().eval(1), 360);
}

TEST(Coordinator, Provenance) {
  auto r = coordinator(7, Strategy::kAuto);
  EXPECT_EQ(r.provenance, Provenance::kPrime);
  r = coordinator(14, Strategy::kAuto);
  EXPECT_EQ(r.provenance, Provenance::kTwoP);
  r = coordinator(15, Strategy::kAuto);
  EXPECT_EQ(r.provenance, Provenance::kFifteen);
  r = coordinator(20, Strategy::kAuto);
  EXPECT_EQ(r.provenance, Provenance::kFactorPower);
  ASSERT_TRUE(r.base_provenance.has_value());
  EXPECT_EQ(*r.base_provenance, Provenance::kTwoP);
  EXPECT_EQ(*r.h, poly_pow(IntPolynomial({1, 6, 16, 6, 1}), 2));
  r = coordinator(21, Strategy::kAuto);
  EXPECT_EQ(r.provenance, Provenance::kTriangulation);
  EXPECT_EQ(*r.h, lift({1, 9, 45, 158, 432, 909, 1302, 909, 432, 158, 45, 9, 1}));
}

TEST(Coordinator, PrimePowers) {
  for (long m : {4L, 8L, 9L, 16L, 25L, 27L, 32L}) {
    const auto dec = squarefree_decompose(m);
    const auto r = coordinator(m, Strategy::kAuto);
    ASSERT_TRUE(r.h.has_value());
    const oracle::Poly ones(static_cast<std::size_t>(dec.sqrt_m), 1);
    EXPECT_EQ(*r.h, lift(oracle::pow(ones, static_cast<unsigned>(dec.power)))) << m;
  }
}

TEST(Coordinator, StrategiesAgree) {
  for (long m : {6L, 10L, 12L, 14L, 15L}) {
    const auto c = coordinator(m, Strategy::kClosed);
    const auto t = coordinator(m, Strategy::kTriangulation);
    const auto b = coordinator(m, Strategy::kBfs);
    ASSERT_TRUE(c.h && t.h && b.h) << m;
    EXPECT_EQ(*c.h, *t.h) << m;
    EXPECT_EQ(*c.h, *b.h) << m;
  }
  // Twelve is small enough to triangulate directly.
  const auto t12 = coordinator(12, Strategy::kTriangulation);
  EXPECT_EQ(t12.provenance, Provenance::kTriangulation);
  EXPECT_FALSE(t12.base_provenance.has_value());
}

TEST(Coordinator, NoClosedFormReported) {
  const auto r = coordinator(21, Strategy::kClosed);
  EXPECT_FALSE(r.h.has_value());
  EXPECT_EQ(r.provenance, Provenance::kUnavailable);
  EXPECT_FALSE(r.note.empty());
}

TEST(Coordinator, ThreeOddPrimesUnavailable) {
  for (auto s : {Strategy::kAuto, Strategy::kClosed, Strategy::kTriangulation, Strategy::kBfs}) {
    const auto r = coordinator(105, s);
    EXPECT_FALSE(r.h.has_value());
    EXPECT_EQ(r.provenance, Provenance::kUnavailable);
    EXPECT_NE(r.note.find("totally unimodular"), std::string::npos);
  }
}

TEST(Coordinator, BfsBudget) {
  Budgets b;
  b.bfs_max_points = 100;
  EXPECT_THROW(coordinator(15, Strategy::kBfs, b), BudgetExceeded);
  // Non-squarefree m falls back to its squarefree part.
  b.bfs_max_points = 200;
  const auto r = coordinator(12, Strategy::kBfs, b);
  ASSERT_TRUE(r.h.has_value());
  EXPECT_EQ(r.provenance, Provenance::kFactorPower);
  EXPECT_EQ(*r.base_provenance, Provenance::kBfs);
}

TEST(Strategy, Parse) {
  for (auto s : {Strategy::kClosed, Strategy::kTriangulation, Strategy::kBfs, Strategy::kAuto})
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_FALSE(parse_strategy("fast").has_value());
  EXPECT_EQ(to_string(Provenance::kFactorPower), "factor_power");
}
