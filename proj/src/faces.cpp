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

#include "cyclolat/faces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cyclolat {

long FaceLattice::find(VertexSet s) const {
  auto it = index_.find(s.bits());
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

int face_dimension(const IntMatrix& points, VertexSet s) {
  const auto idx = s.indices();
  const std::size_t d = points.rows();
  std::vector<std::int64_t> rows(idx.size() * d);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t r = 0; r < d; ++r) rows[i * d + r] = points(r, static_cast<std::size_t>(idx[i]));
  return static_cast<int>(small::rank(rows, idx.size(), d)) - 1;
}

std::vector<VertexSet> facets_of_face(const IntMatrix& points, const std::vector<Facet>& facets,
                                      VertexSet g, int dim_g) {
  std::vector<VertexSet> out;
  if (dim_g <= 0) return out;
  if (g.size() == dim_g + 1) {
    for (int v : g.indices()) out.push_back(g.without(v));
    return out;
  }
  std::unordered_set<std::uint64_t> seen;
  for (const auto& f : facets) {
    const VertexSet s = g & f.incident;
    if (s == g || s.size() < dim_g) continue;
    if (!seen.insert(s.bits()).second) continue;
    if (face_dimension(points, s) == dim_g - 1) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FaceLattice build_face_lattice(const IntMatrix& points, const std::vector<Facet>& facets,
                               const Budgets& budget) {
  FaceLattice lat;
  const std::size_t d = points.rows();
  lat.dim_ = d;
  lat.by_dim_.assign(d, {});
  auto intern = [&](VertexSet s, int dim) {
    auto [it, inserted] = lat.index_.try_emplace(s.bits(), lat.faces_.size());
    if (inserted) {
      if (lat.faces_.size() >= budget.max_faces) {
        throw BudgetExceeded("build_face_lattice: more than " + std::to_string(budget.max_faces) + " faces");
      }
      lat.faces_.push_back(Face{s, dim, {}});
      lat.by_dim_[static_cast<std::size_t>(dim)].push_back(it->second);
    }
    return it->second;
  };

  for (const auto& f : facets) intern(f.incident, static_cast<int>(d) - 1);
  for (int k = static_cast<int>(d) - 1; k >= 1; --k) {
    // Copy: interning children appends to the level below only.
    const auto level = lat.by_dim_[static_cast<std::size_t>(k)];
    for (std::size_t id : level) {
      const VertexSet g = lat.faces_[id].vertices;
      std::vector<std::size_t> kids;
      for (VertexSet s : facets_of_face(points, facets, g, k)) kids.push_back(intern(s, k - 1));
      lat.faces_[id].children = std::move(kids);
    }
  }
  for (auto& level : lat.by_dim_) {
    std::sort(level.begin(), level.end(),
              [&](std::size_t a, std::size_t b) { return lat.faces_[a].vertices < lat.faces_[b].vertices; });
  }
  return lat;
}

std::vector<BigInt> f_vector(const FaceLattice& lattice) {
  std::vector<BigInt> f(lattice.ambient_dim() + 1, 0);
  f[0] = 1;
  for (std::size_t k = 0; k < lattice.ambient_dim(); ++k) f[k + 1] = static_cast<unsigned long>(lattice.of_dim(static_cast<int>(k)).size());
  return f;
}

IntPolynomial h_from_f(std::span<const BigInt> f, std::size_t d) {
  if (f.size() != d + 1) throw std::invalid_argument("h_from_f: f must have length d+1");
  std::vector<BigInt> h(d + 1, 0);
  for (std::size_t j = 0; j <= d; ++j) {
    for (std::size_t k = 0; k <= j; ++k) {
      BigInt term = binomial(static_cast<long>(d - k), static_cast<long>(j - k)) * f[k];
      if ((j - k) % 2) h[j] -= term;
      else h[j] += term;
    }
  }
  return IntPolynomial(std::move(h));
}

std::vector<std::vector<int>> Triangulation::simplices() const {
  std::vector<std::vector<int>> out;
  out.reserve(cells.size());
  for (VertexSet c : cells) {
    auto s = c.indices();
    s.push_back(apex);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

class Puller {
 public:
  Puller(const IntMatrix& pts, const std::vector<Facet>& facets, std::span<const int> order)
      : pts_(pts), facets_(facets), rank_(pts.cols()) {
    if (order.empty()) {
      std::iota(rank_.begin(), rank_.end(), 0);
    } else {
      if (order.size() != pts.cols()) throw std::invalid_argument("pulling_triangulation: order size mismatch");
      std::vector<bool> hit(pts.cols(), false);
      for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto v = static_cast<std::size_t>(order[pos]);
        if (v >= pts.cols() || hit[v]) throw std::invalid_argument("pulling_triangulation: not a permutation");
        hit[v] = true;
        rank_[v] = static_cast<int>(pos);
      }
    }
  }

  const std::vector<VertexSet>& pull(VertexSet g, int dim_g) {
    if (auto it = memo_.find(g.bits()); it != memo_.end()) return it->second;
    std::vector<VertexSet> cells;
    if (g.size() == dim_g + 1) {
      cells.push_back(g);
    } else {
      int apex = -1;
      for (int v : g.indices())
        if (apex < 0 || rank_[static_cast<std::size_t>(v)] < rank_[static_cast<std::size_t>(apex)]) apex = v;
      for (VertexSet h : facets_of_face(pts_, facets_, g, dim_g)) {
        if (h.contains(apex)) continue;
        for (VertexSet c : pull(h, dim_g - 1)) cells.push_back(c.with(apex));
      }
    }
    return memo_.emplace(g.bits(), std::move(cells)).first->second;
  }

 private:
  const IntMatrix& pts_;
  const std::vector<Facet>& facets_;
  std::vector<int> rank_;
  std::unordered_map<std::uint64_t, std::vector<VertexSet>> memo_;
};

}  // namespace

Triangulation pulling_triangulation(const IntMatrix& points, const std::vector<Facet>& facets,
                                    std::span<const int> vertex_order) {
  const std::size_t d = points.rows();
  Puller puller(points, facets, vertex_order);
  Triangulation tri;
  tri.apex = static_cast<int>(points.cols());
  for (const auto& f : facets) {
    const auto& cells = puller.pull(f.incident, static_cast<int>(d) - 1);
    tri.cells.insert(tri.cells.end(), cells.begin(), cells.end());
  }
  std::sort(tri.cells.begin(), tri.cells.end());

  tri.unimodular = true;
  std::vector<std::int64_t> m(d * d);
  for (VertexSet c : tri.cells) {
    const auto idx = c.indices();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t r = 0; r < d; ++r) m[r * d + i] = points(r, static_cast<std::size_t>(idx[i]));
    const auto det = small::det(m, d);
    if (det != 1 && det != -1) {
      tri.unimodular = false;
      break;
    }
  }
  return tri;
}

BoundaryHPolynomial boundary_h_polynomial(const Triangulation& tri, std::size_t dim) {
  std::unordered_set<std::uint64_t> faces;
  faces.reserve(tri.cells.size() * 64);
  for (VertexSet c : tri.cells) {
    const std::uint64_t mask = c.bits();
    for (std::uint64_t s = mask; s != 0; s = (s - 1) & mask) faces.insert(s);
  }
  std::vector<BigInt> f(dim + 1, 0);
  f[0] = 1;
  std::vector<unsigned long> counts(dim + 1, 0);
  for (std::uint64_t s : faces) {
    const auto k = static_cast<std::size_t>(std::popcount(s));
    if (k > dim) throw std::invalid_argument("boundary_h_polynomial: cell larger than dim");
    ++counts[k];
  }
  for (std::size_t k = 1; k <= dim; ++k) f[k] = counts[k];
  return {h_from_f(f, dim), tri.unimodular};
}

}  // namespace cyclolat
