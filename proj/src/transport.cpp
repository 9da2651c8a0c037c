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

#include "cyclolat/transport.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace cyclolat {

std::size_t TransportVertex::zero_count() const {
  return static_cast<std::size_t>(std::count(table.begin(), table.end(), 0));
}

namespace {

// Nodes 0..p-1 are rows, p..p+q-1 are columns. Edge e = i*q + j.
class TreeEnumerator {
 public:
  TreeEnumerator(long p, long q, std::uint64_t limit)
      : p_(p), q_(q), nodes_(static_cast<std::size_t>(p + q)), limit_(limit) {}

  template <class Visit>
  void run(Visit&& visit) {
    std::vector<int> parent(nodes_);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> chosen;
    recurse(0, parent, chosen, visit);
  }

  std::uint64_t count() const { return count_; }

 private:
  static int find(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }

  template <class Visit>
  void recurse(long edge, std::vector<int>& parent, std::vector<int>& chosen, Visit& visit) {
    const auto need = static_cast<long>(nodes_) - 1 - static_cast<long>(chosen.size());
    if (need == 0) {
      if (++count_ > limit_) throw BudgetExceeded("enumerate_vertices_2d: spanning tree budget exceeded");
      visit(chosen);
      return;
    }
    if (p_ * q_ - edge < need) return;
    const int a = find(parent, static_cast<int>(edge / q_));
    const int b = find(parent, static_cast<int>(p_ + edge % q_));
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      chosen.push_back(static_cast<int>(edge));
      recurse(edge + 1, parent, chosen, visit);
      chosen.pop_back();
      parent[static_cast<std::size_t>(a)] = a;
    }
    recurse(edge + 1, parent, chosen, visit);
  }

  long p_, q_;
  std::size_t nodes_;
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

// Unique flows on a spanning tree meeting row sums q and column sums p.
std::vector<std::int64_t> tree_flows(long p, long q, const std::vector<int>& edges) {
  const auto n = static_cast<std::size_t>(p + q);
  std::vector<std::int64_t> need(n);
  for (std::size_t v = 0; v < n; ++v) need[v] = static_cast<long>(v) < p ? q : p;
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    incident[static_cast<std::size_t>(edges[k] / q)].push_back(k);
    incident[static_cast<std::size_t>(p + edges[k] % q)].push_back(k);
  }
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = incident[v].size();
  std::vector<bool> edge_done(edges.size(), false);
  std::vector<std::int64_t> flow(edges.size(), 0);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    const std::size_t v = leaves.back();
    leaves.pop_back();
    if (degree[v] != 1) continue;
    std::size_t e = 0;
    for (std::size_t k : incident[v])
      if (!edge_done[k]) e = k;
    edge_done[e] = true;
    flow[e] = need[v];
    const std::size_t row = static_cast<std::size_t>(edges[e] / q);
    const std::size_t col = static_cast<std::size_t>(p + edges[e] % q);
    const std::size_t other = v == row ? col : row;
    need[v] = 0;
    need[other] -= flow[e];
    degree[v] = 0;
    if (--degree[other] == 1) leaves.push_back(other);
  }
  std::vector<std::int64_t> table(static_cast<std::size_t>(p * q), 0);
  for (std::size_t k = 0; k < edges.size(); ++k) table[static_cast<std::size_t>(edges[k])] = flow[k];
  return table;
}

void require_distinct_primes(long p, long q, const char* who) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw std::invalid_argument(std::string(who) + ": p and q must be distinct primes");
  }
}

}  // namespace

TransportEnumeration enumerate_vertices_2d(long p, long q, const Budgets& budget) {
  require_distinct_primes(p, q, "enumerate_vertices_2d");
  TreeEnumerator trees(p, q, budget.max_spanning_trees);
  std::set<std::vector<std::int64_t>> seen;
  TransportEnumeration out;
  trees.run([&](const std::vector<int>& edges) {
    auto table = tree_flows(p, q, edges);
    for (int e : edges)
      if (table[static_cast<std::size_t>(e)] <= 0) return;
    if (!seen.insert(table).second) return;
    TransportVertex v{p, q, std::move(table), {}};
    for (int e : edges) v.support.emplace_back(static_cast<int>(e / q), static_cast<int>(e % q));
    std::sort(v.support.begin(), v.support.end());
    out.vertices.push_back(std::move(v));
  });
  out.spanning_trees = trees.count();
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const TransportVertex& a, const TransportVertex& b) { return a.table < b.table; });
  return out;
}

Facet facet_from_vertex(const TransportVertex& v, const VertexMatrix& vp, const VertexMatrix& vq) {
  if (static_cast<long>(vp.count()) != v.p || static_cast<long>(vq.count()) != v.q) {
    throw std::invalid_argument("facet_from_vertex: table shape does not match the factor polytopes");
  }
  const IntMatrix a = tensor(vp.matrix, vq.matrix);
  std::uint64_t zeros = 0;
  for (long i = 0; i < v.p; ++i)
    for (long j = 0; j < v.q; ++j)
      if (v.at(i, j) == 0) zeros |= std::uint64_t{1} << (i * v.q + j);
  const auto normal = hyperplane_through(a, VertexSet(zeros));
  if (!normal) throw std::invalid_argument("facet_from_vertex: zero entries do not span a hyperplane");

  std::uint64_t incident = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    __int128 s = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += static_cast<__int128>(normal->numerators()[r]) * a(r, c);
    if (s > normal->denominator()) throw std::invalid_argument("facet_from_vertex: hyperplane is not supporting");
    if (s == normal->denominator()) incident |= std::uint64_t{1} << c;
  }
  return Facet{*normal, VertexSet(incident)};
}

DualityReport verify_duality(long p, long q, const Budgets& budget) {
  require_distinct_primes(p, q, "verify_duality");
  if (p > q) std::swap(p, q);  // build(pq) orders its tensor factors ascending
  DualityReport rep;
  const VertexMatrix vp = build_prime(p), vq = build_prime(q), vm = build(p * q);
  const auto facets = enumerate_facets(vm, budget);
  const auto en = enumerate_vertices_2d(p, q, budget);
  rep.vertex_count = en.vertices.size();
  rep.facet_count = facets.size();
  rep.spanning_trees = en.spanning_trees;
  auto fail = [&](std::string why) {
    rep.failure = std::move(why);
    return rep;
  };
  if (tensor(vp.matrix, vq.matrix) != vm.matrix) return fail("C_pq is not C_p (x) C_q in column order");

  std::set<std::uint64_t> facet_sets;
  for (const auto& f : facets) facet_sets.insert(f.incident.bits());
  std::set<std::uint64_t> hit;
  const auto expected_zeros = static_cast<std::size_t>((p - 1) * (q - 1));
  for (const auto& v : en.vertices) {
    if (v.zero_count() != expected_zeros) return fail("vertex with an unexpected number of zero entries");
    Facet f;
    try {
      f = facet_from_vertex(v, vp, vq);
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    }
    if (static_cast<std::size_t>(f.incident.size()) != expected_zeros) return fail("incident count differs from zero count");
    if (!facet_sets.contains(f.incident.bits())) return fail("dual hyperplane is not an enumerated facet");
    if (!hit.insert(f.incident.bits()).second) return fail("two vertices map to the same facet");
    for (long i = 0; i < p; ++i)
      for (long j = 0; j < q; ++j) {
        const std::size_t col = static_cast<std::size_t>(i * q + j);
        __int128 s = 0;
        for (std::size_t r = 0; r < vm.dim; ++r) s += static_cast<__int128>(f.normal.numerators()[r]) * vm.matrix(r, col);
        if (s != static_cast<__int128>(f.normal.denominator()) * (1 - v.at(i, j))) {
          return fail("facet values do not equal 1 - table entries");
        }
      }
  }
  if (hit.size() != facets.size()) return fail("some facets have no dual vertex");
  rep.ok = true;
  return rep;
}

void write_vertices_csv(std::ostream& os, const std::vector<TransportVertex>& vs) {
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < v.table.size(); ++i) os << (i ? "," : "") << v.table[i];
    os << '\n';
  }
}

}  // namespace cyclolat
