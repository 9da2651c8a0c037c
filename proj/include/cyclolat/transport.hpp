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

#include "cyclolat/budget.hpp"
#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/hull.hpp"

namespace cyclolat {

/// A vertex of the transportation polytope P(p, q): nonnegative p x q table
/// with row sums q and column sums p.
struct TransportVertex {
  long p = 0, q = 0;
  std::vector<std::int64_t> table;  // row-major p x q
  std::vector<std::pair<int, int>> support;

  std::int64_t at(long i, long j) const { return table[static_cast<std::size_t>(i * q + j)]; }
  std::size_t zero_count() const;
  friend bool operator==(const TransportVertex&, const TransportVertex&) = default;
};

struct TransportEnumeration {
  std::vector<TransportVertex> vertices;  // sorted by table
  std::uint64_t spanning_trees = 0;       // all spanning trees of K_{p,q}
};

/// Enumerates every spanning tree of K_{p,q}, solves its margins by leaf
/// elimination, and keeps the trees whose flows are all positive. p and q
/// must be distinct primes.
TransportEnumeration enumerate_vertices_2d(long p, long q, const Budgets& budget = {});

/// The facet of C_p (x) C_q dual to `v`: its incident vertices are the
/// products v_i (x) w_j with v(i, j) = 0, and the normal is solved on them.
/// Throws std::invalid_argument if the zeros do not span a facet.
Facet facet_from_vertex(const TransportVertex& v, const VertexMatrix& vp, const VertexMatrix& vq);

struct DualityReport {
  bool ok = false;
  std::size_t vertex_count = 0;
  std::size_t facet_count = 0;
  std::uint64_t spanning_trees = 0;
  std::string failure;  // first failed condition, empty when ok
};

/// Checks that facet_from_vertex maps the vertices of P(p, q) bijectively
/// onto the facets of C_pq, with (p-1)(q-1) incident vertices per facet and
/// normal . (v_i (x) w_j) = 1 - x_ij on every table entry.
DualityReport verify_duality(long p, long q, const Budgets& budget = {});

/// One vertex per row: the row-major table entries, comma separated.
void write_vertices_csv(std::ostream& os, const std::vector<TransportVertex>& vs);

}  // namespace cyclolat
