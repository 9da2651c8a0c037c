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

#include "cyclolat/hull.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "cyclolat/simd/kernels.hpp"

namespace cyclolat {

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
  if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("dot product overflow");
  return static_cast<std::int64_t>(acc);
}

void make_primitive(Vec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd_abs(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Restricts `basis` (spanning the orthogonal complement of the vectors seen
// so far) to the complement of w as well. Returns false if w is already in
// the span, leaving basis unchanged.
bool complement_step(std::vector<Vec>& basis, const Vec& w) {
  std::vector<std::int64_t> t(basis.size());
  std::size_t pivot = basis.size();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    t[k] = dot(basis[k], w);
    if (t[k] != 0 && pivot == basis.size()) pivot = k;
  }
  if (pivot == basis.size()) return false;
  std::vector<Vec> next;
  next.reserve(basis.size() - 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == pivot) continue;
    Vec u(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      const __int128 v = static_cast<__int128>(t[pivot]) * basis[k][j] -
                         static_cast<__int128>(t[k]) * basis[pivot][j];
      if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("complement elimination overflow");
      u[j] = static_cast<std::int64_t>(v);
    }
    make_primitive(u);
    next.push_back(std::move(u));
  }
  basis.swap(next);
  return true;
}

// Depth-first scan over dim-subsets of the points. The state is an integer
// basis of the orthogonal complement of the lifted points (v_i, -1) chosen so
// far; once dim points are in, the remaining vector (a, c) gives a . v = c on
// the chosen set.
class FacetScanner {
 public:
  FacetScanner(const IntMatrix& pts) : pts_(pts), d_(pts.rows()), n_(pts.cols()) {
    lifted_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      lifted_[i].resize(d_ + 1);
      for (std::size_t r = 0; r < d_; ++r) lifted_[i][r] = pts(r, i);
      lifted_[i][d_] = -1;
    }
    // Rows are points: the forms a . v_i <= c are evaluated per point.
    Vec rowmajor(n_ * d_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t r = 0; r < d_; ++r) rowmajor[i * d_ + r] = pts(r, i);
    forms_ = simd::LinearForms(n_, d_, rowmajor, Vec(n_, 1));
  }

  std::vector<Facet> run() {
    std::vector<Vec> basis(d_ + 1, Vec(d_ + 1, 0));
    for (std::size_t i = 0; i <= d_; ++i) basis[i][i] = 1;
    recurse(basis, 0, 0);
    std::vector<Facet> out(found_.begin(), found_.end());
    return out;
  }

 private:
  struct ByNormal {
    bool operator()(const Facet& a, const Facet& b) const { return a.normal < b.normal; }
  };

  void recurse(const std::vector<Vec>& basis, std::size_t depth, std::size_t start) {
    if (depth == d_) {
      leaf(basis.front());
      return;
    }
    for (std::size_t i = start; i + (d_ - depth) <= n_; ++i) {
      std::vector<Vec> next = basis;
      if (!complement_step(next, lifted_[i])) continue;  // dependent on the chosen points
      recurse(next, depth + 1, i + 1);
    }
  }

  void leaf(Vec u) {
    std::int64_t c = u[d_];
    if (c < 0) {
      for (auto& x : u) x = -x;
      c = -c;
    }
    std::span<const std::int64_t> a(u.data(), d_);
    if (c == 0) {
      // A hyperplane through the origin supporting the point set means the
      // origin is not interior.
      bool pos = false, neg = false;
      for (std::size_t i = 0; i < n_; ++i) {
        const auto s = dot(a, std::span<const std::int64_t>(lifted_[i].data(), d_));
        pos |= s > 0;
        neg |= s < 0;
      }
      if (!(pos && neg)) throw std::invalid_argument("enumerate_facets: origin is not an interior point");
      return;
    }
    VertexSet incident;
    if (!classify(a, c, incident)) {
      // Every point on the far side: the origin is cut off by this facet.
      for (std::size_t i = 0; i < n_; ++i)
        if (dot(a, std::span<const std::int64_t>(lifted_[i].data(), d_)) < c) return;
      throw std::invalid_argument("enumerate_facets: origin is not an interior point");
    }
    if (!seen_.insert(incident.bits()).second) return;
    found_.insert(Facet{RatVector(Vec(a.begin(), a.end()), c), incident});
  }

  bool classify(std::span<const std::int64_t> a, std::int64_t c, VertexSet& incident) const {
    std::int64_t amax = c;
    for (auto x : a) amax = std::max(amax, x < 0 ? -x : x);
    if (n_ <= 64 && forms_.fits(amax, c)) {
      std::int32_t x32[64];
      for (std::size_t j = 0; j < d_; ++j) x32[j] = static_cast<std::int32_t>(a[j]);
      const auto cl = simd::active().classify(forms_, x32, static_cast<std::int32_t>(c));
      incident = VertexSet(cl.equal_mask);
      return cl.within;
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto s = dot(a, std::span<const std::int64_t>(lifted_[i].data(), d_));
      if (s > c) return false;
      if (s == c) mask |= std::uint64_t{1} << i;
    }
    incident = VertexSet(mask);
    return true;
  }

  const IntMatrix& pts_;
  std::size_t d_, n_;
  std::vector<Vec> lifted_;
  simd::LinearForms forms_;
  std::unordered_set<std::uint64_t> seen_;
  std::set<Facet, ByNormal> found_;
};

}  // namespace

std::vector<Facet> enumerate_facets(const IntMatrix& points, const Budgets& budget) {
  const std::size_t d = points.rows(), n = points.cols();
  if (d == 0 || n == 0) throw std::invalid_argument("enumerate_facets: empty point set");
  if (d > budget.hull_max_dim || n > budget.hull_max_vertices || n > 64) {
    throw BudgetExceeded("enumerate_facets: dim " + std::to_string(d) + " with " + std::to_string(n) +
                         " vertices exceeds the hull budget");
  }
  if (small::rank(points.data(), d, n) != d) {
    throw std::invalid_argument("enumerate_facets: points are not full-dimensional");
  }
  return FacetScanner(points).run();
}

std::optional<RatVector> hyperplane_through(const IntMatrix& points, VertexSet subset) {
  const std::size_t d = points.rows();
  std::vector<Vec> basis(d + 1, Vec(d + 1, 0));
  for (std::size_t i = 0; i <= d; ++i) basis[i][i] = 1;
  for (int idx : subset.indices()) {
    if (static_cast<std::size_t>(idx) >= points.cols()) throw std::out_of_range("hyperplane_through: index");
    Vec w(d + 1);
    for (std::size_t r = 0; r < d; ++r) w[r] = points(r, static_cast<std::size_t>(idx));
    w[d] = -1;
    complement_step(basis, w);
  }
  if (basis.size() != 1 || basis.front()[d] == 0) return std::nullopt;
  Vec u = basis.front();
  const std::int64_t c = u[d];
  u.pop_back();
  return RatVector(std::move(u), c);
}

bool contains_point(const std::vector<Facet>& facets, const IntVector& x, std::int64_t dilate) {
  for (const auto& f : facets) {
    if (f.normal.dim() != x.dim()) throw std::invalid_argument("contains_point: dimension mismatch");
    const __int128 lhs = dot(f.normal.numerators(), x.entries());
    if (lhs > static_cast<__int128>(dilate) * f.normal.denominator()) return false;
  }
  return true;
}

bool verify_lattice_points(const VertexMatrix& v, const std::vector<Facet>& facets,
                           const Budgets& budget) {
  const std::size_t d = v.dim;
  if (d > budget.lattice_max_dim) {
    throw BudgetExceeded("verify_lattice_points: dim " + std::to_string(d) + " exceeds budget");
  }
  Vec coeffs, bounds;
  for (const auto& f : facets) {
    coeffs.insert(coeffs.end(), f.normal.numerators().begin(), f.normal.numerators().end());
    bounds.push_back(f.normal.denominator());
  }
  const simd::LinearForms forms(facets.size(), d, coeffs, bounds);
  if (!forms.fits(1, 1)) throw std::overflow_error("verify_lattice_points: normals too large");

  std::set<std::vector<std::int32_t>> expected;
  expected.insert(std::vector<std::int32_t>(d, 0));
  for (std::size_t c = 0; c < v.count(); ++c) {
    std::vector<std::int32_t> col(d);
    for (std::size_t r = 0; r < d; ++r) col[r] = static_cast<std::int32_t>(v.matrix(r, c));
    expected.insert(col);
  }

  const auto& k = simd::active();
  std::vector<std::int32_t> x(d, -1);
  std::size_t inside = 0;
  while (true) {
    if (k.all_within(forms, x.data(), 1)) {
      if (!expected.contains(x)) return false;
      ++inside;
    }
    std::size_t i = 0;
    while (i < d && x[i] == 1) x[i++] = -1;
    if (i == d) break;
    ++x[i];
  }
  return inside == expected.size();
}

bool is_simplicial(const std::vector<Facet>& facets, std::size_t dim) {
  return std::all_of(facets.begin(), facets.end(),
                     [&](const Facet& f) { return static_cast<std::size_t>(f.incident.size()) == dim; });
}

bool is_reflexive(const std::vector<Facet>& facets) {
  return std::all_of(facets.begin(), facets.end(), [](const Facet& f) { return f.normal.is_integral(); });
}

void write_facets_text(std::ostream& os, const std::vector<Facet>& facets) {
  for (const auto& f : facets) {
    os << f.normal.denominator() << " ;";
    for (auto a : f.normal.numerators()) os << ' ' << a;
    os << " ;";
    for (int i : f.incident.indices()) os << ' ' << i;
    os << '\n';
  }
}

}  // namespace cyclolat
