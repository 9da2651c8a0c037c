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

#include "cyclolat/budget.hpp"

#include <charconv>
#include <cstdlib>

namespace cyclolat {
namespace {

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("budget: not an unsigned integer: " + std::string(s));
  }
  return v;
}

}  // namespace

Budgets Budgets::from_env() {
  Budgets b;
  if (const char* env = std::getenv("CYCLOLAT_BUDGET")) b.apply(env);
  return b;
}

void Budgets::apply(std::string_view spec) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      bfs_max_points = parse_u64(item);
      continue;
    }
    const std::string_view key = item.substr(0, eq);
    const std::uint64_t v = parse_u64(item.substr(eq + 1));
    if (key == "points") bfs_max_points = v;
    else if (key == "faces") max_faces = v;
    else if (key == "hull_dim") hull_max_dim = v;
    else if (key == "hull_vertices") hull_max_vertices = v;
    else if (key == "lattice_dim") lattice_max_dim = v;
    else if (key == "dilate") dilate_max_candidates = v;
    else if (key == "tu_side") tu_max_small_side = v;
    else if (key == "tu_cols") tu_max_cols = v;
    else if (key == "split_cols") split_max_cols = v;
    else if (key == "trees") max_spanning_trees = v;
    else throw std::invalid_argument("budget: unknown key " + std::string(key));
  }
}

}  // namespace cyclolat
