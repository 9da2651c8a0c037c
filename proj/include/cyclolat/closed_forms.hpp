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

#include <optional>
#include <string>
#include <string_view>

#include "cyclolat/budget.hpp"
#include "cyclolat/exact.hpp"

namespace cyclolat {

/// Coordinator polynomial of Z[zeta_p]: 1 + x + ... + x^{p-1}.
IntPolynomial h_prime(long p);

/// Coordinator polynomial of Z[zeta_{2p}] for an odd prime p: palindromic
/// with h_j = sum_{k<=j} C(p, k) for j <= (p-1)/2.
IntPolynomial h_two_p(long p);

/// Coordinator polynomial of Z[zeta_15].
IntPolynomial h_fifteen();

/// Number of (k-1)-faces of C_{2p}, 2^k C(p, k), for 1 <= k <= (p-1)/2.
BigInt face_count_2p(long p, long k);

/// Number of facets of C_{2p}, p C(p-1, (p-1)/2).
BigInt facet_count_2p(long p);

enum class Strategy { kClosed, kTriangulation, kBfs, kAuto };
enum class Provenance { kPrime, kTwoP, kFifteen, kFactorPower, kTable, kTriangulation, kBfs, kUnavailable };

std::string_view to_string(Strategy s);
std::string_view to_string(Provenance p);
std::optional<Strategy> parse_strategy(std::string_view s);

struct ClosedFormResult {
  long m = 0;
  std::optional<IntPolynomial> h;
  Provenance provenance = Provenance::kUnavailable;
  /// Provenance of the squarefree factor when m is not squarefree.
  std::optional<Provenance> base_provenance;
  std::string note;
};

/// Coordinator polynomial of Z[zeta_m].
///
/// kClosed uses only the closed forms for the squarefree part. kAuto tries
/// closed forms, then the pulling-triangulation pipeline, then the BFS fit,
/// always on sqrt(m), and raises the result to the power m/sqrt(m).
/// kTriangulation and kBfs run their pipeline on m itself when it fits the
/// budget (an independent check of the factorization) and otherwise on
/// sqrt(m) followed by the power.
///
/// Values of m with three or more odd prime factors report kUnavailable:
/// no pipeline here can certify them.
ClosedFormResult coordinator(long m, Strategy strategy, const Budgets& budget = {});

/// Triangulation pipeline on m directly: facets, pulling triangulation,
/// boundary h-polynomial. Returns nullopt when the triangulation is not
/// unimodular.
std::optional<IntPolynomial> coordinator_by_triangulation(long m, const Budgets& budget = {});

/// BFS pipeline on m directly: shells 0..phi(m), then fit.
IntPolynomial coordinator_by_bfs(long m, const Budgets& budget = {});

}  // namespace cyclolat
