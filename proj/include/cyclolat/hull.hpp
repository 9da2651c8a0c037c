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

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cyclolat/budget.hpp"
#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/exact.hpp"

namespace cyclolat {

/// Set of vertex indices < 64, as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  static VertexSet of(std::initializer_list<int> idx) {
    std::uint64_t b = 0;
    for (int i : idx) b |= std::uint64_t{1} << i;
    return VertexSet(b);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr VertexSet with(int i) const { return VertexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr VertexSet without(int i) const { return VertexSet(bits_ & ~(std::uint64_t{1} << i)); }
  std::vector<int> indices() const;

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Facet hyperplane normal . x = 1 with its incident vertices.
struct Facet {
  RatVector normal;
  VertexSet incident;
};

/// All facets of conv(columns of `points`), sorted by normal. The origin must
/// be an interior point. Throws std::invalid_argument on degenerate input and
/// BudgetExceeded outside the dim/vertex limits.
std::vector<Facet> enumerate_facets(const IntMatrix& points, const Budgets& budget = {});
inline std::vector<Facet> enumerate_facets(const VertexMatrix& v, const Budgets& budget = {}) {
  return enumerate_facets(v.matrix, budget);
}

/// The hyperplane normal . x = 1 through the given columns, if they span a
/// unique hyperplane that misses the origin.
std::optional<RatVector> hyperplane_through(const IntMatrix& points, VertexSet subset);

/// normal . x <= dilate for every facet, i.e. x lies in dilate * P.
bool contains_point(const std::vector<Facet>& facets, const IntVector& x, std::int64_t dilate = 1);

/// True iff the {-1,0,1}-vectors inside the polytope are exactly the
/// columns of `v` plus the origin. Needs v.dim <= budget.lattice_max_dim.
bool verify_lattice_points(const VertexMatrix& v, const std::vector<Facet>& facets,
                           const Budgets& budget = {});

bool is_simplicial(const std::vector<Facet>& facets, std::size_t dim);
bool is_reflexive(const std::vector<Facet>& facets);

/// "denominator ; numerators ; incident indices", one facet per line.
void write_facets_text(std::ostream& os, const std::vector<Facet>& facets);

}  // namespace cyclolat
