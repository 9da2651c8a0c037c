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

#include <array>
#include <optional>
#include <vector>

#include "cyclolat/budget.hpp"
#include "cyclolat/exact.hpp"

namespace cyclolat {

/// A square submatrix whose determinant is outside {-1, 0, 1}.
struct SubmatrixWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  BigInt det;
};

struct TUVerdict {
  bool is_tu = true;
  std::optional<SubmatrixWitness> submatrix;
  /// Set when the verdict came from a column set with no valid split.
  std::optional<std::vector<std::size_t>> split_violation;
};

/// Exhaustive total-unimodularity test. Block-diagonal components are tested
/// separately; within a block all k x k minors are computed level by level
/// (k = 1, 2, ...) by expansion along the last column, stopping at the first
/// minor outside {-1, 0, 1}. Entries must be in {-1, 0, 1}
/// (std::invalid_argument otherwise). Each block must satisfy
/// min(rows, cols) <= budget.tu_max_small_side and
/// max(rows, cols) <= budget.tu_max_cols, else BudgetExceeded.
TUVerdict is_totally_unimodular(const IntMatrix& a, const Budgets& budget = {});

/// Signs (+1/-1, aligned with `cols`) such that the signed column sum has
/// entries in {-1, 0, 1}, or nullopt if no such split exists. The first
/// column is always +1. BudgetExceeded if cols.size() > budget.split_max_cols.
std::optional<std::vector<int>> check_split_criterion(const IntMatrix& a, std::span<const std::size_t> cols,
                                                      const Budgets& budget = {});

/// Column indices in build(3pq) of the three columns
///   (0 ; 1),  (u ; u) with u = (1, 0_{p-2}) repeated,  (t ; t) with
///   t = (1_{p-1}, 0_{(p-1)(q-2)}),
/// whose split test fails, so A_{3pq} is not totally unimodular. The split
/// test is re-run; std::logic_error if it unexpectedly succeeds.
/// p, q must be distinct primes > 3.
std::array<std::size_t, 3> tu_failure_certificate_3pq(long p, long q);

}  // namespace cyclolat
