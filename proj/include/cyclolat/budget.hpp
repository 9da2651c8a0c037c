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
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclolat {

/// Thrown when a computation would exceed one of the configured limits.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size limits for the exponential or memory-bound algorithms.
struct Budgets {
  std::size_t hull_max_dim = 12;
  std::size_t hull_max_vertices = 35;
  std::size_t lattice_max_dim = 10;            // 3^dim candidate points
  std::uint64_t dilate_max_candidates = 50'000'000;  // (2k+1)^dim
  std::size_t max_faces = 10'000'000;
  std::uint64_t bfs_max_points = 20'000'000;
  std::size_t tu_max_small_side = 8;           // min(rows, cols)
  std::size_t tu_max_cols = 30;
  std::size_t split_max_cols = 25;
  std::uint64_t max_spanning_trees = 5'000'000;

  /// Defaults, overridden by CYCLOLAT_BUDGET if set.
  static Budgets from_env();
  /// Applies "key=value,key=value" overrides; a bare integer sets
  /// bfs_max_points. Throws std::invalid_argument on unknown keys.
  void apply(std::string_view spec);
};

}  // namespace cyclolat
