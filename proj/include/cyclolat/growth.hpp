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
#include <vector>

#include "cyclolat/budget.hpp"
#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/exact.hpp"
#include "cyclolat/hull.hpp"

namespace cyclolat {

/// S(0..max_n): number of lattice points of word length exactly n.
struct ShellCounts {
  long m = 0;
  unsigned max_n = 0;
  std::vector<std::uint64_t> counts;

  friend bool operator==(const ShellCounts&, const ShellCounts&) = default;
};

/// Carries the shells that completed before the point budget ran out.
class BfsBudgetExceeded : public BudgetExceeded {
 public:
  BfsBudgetExceeded(const std::string& what, ShellCounts partial)
      : BudgetExceeded(what), partial_(std::move(partial)) {}
  const ShellCounts& partial() const { return partial_; }

 private:
  ShellCounts partial_;
};

/// Breadth-first search from the origin over the columns of `generators`.
/// Single-threaded; the visited set holds every point reached so far.
ShellCounts bfs_shells(const IntMatrix& generators, unsigned max_n, const Budgets& budget = {});
inline ShellCounts bfs_shells(const VertexMatrix& v, unsigned max_n, const Budgets& budget = {}) {
  auto s = bfs_shells(v.matrix, max_n, budget);
  s.m = v.m;
  return s;
}

/// counts == series_coeffs(h, d, max_n) elementwise.
bool shells_match_polynomial(const ShellCounts& shells, const IntPolynomial& h, unsigned d);

/// Numerator of sum S(n) x^n = h(x) / (1-x)^d from S(0..d): the degree <= d
/// truncation of (1-x)^d * sum S(n) x^n. Needs shells.max_n >= d.
IntPolynomial fit_polynomial(const ShellCounts& shells, unsigned d);

/// Integer points x in [-k,k]^dim with normal . x <= k on every facet.
std::uint64_t dilate_point_count(const std::vector<Facet>& facets, std::size_t dim, std::int64_t k,
                                 const Budgets& budget = {});

struct NormalityReport {
  bool normal = true;
  std::vector<std::uint64_t> ball_sizes;    // sum_{n<=k} S(n), k = 0..max_k
  std::vector<std::uint64_t> dilate_counts; // |kP cap Z^d|, k = 0..max_k
};

/// Compares word-length balls with dilated lattice-point counts for k <= max_k.
NormalityReport normality_check(const VertexMatrix& v, const std::vector<Facet>& facets, unsigned max_k,
                                const Budgets& budget = {});

void write_shells_csv(std::ostream& os, const ShellCounts& s);

}  // namespace cyclolat
