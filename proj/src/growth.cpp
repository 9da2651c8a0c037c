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

#include "cyclolat/growth.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

#include "cyclolat/simd/kernels.hpp"

namespace cyclolat {
namespace {

using u128 = unsigned __int128;

template <class Key>
std::size_t hash_key(Key k) {
  std::uint64_t x = static_cast<std::uint64_t>(k) ^ static_cast<std::uint64_t>(k >> 32 >> 32) * 0x9E3779B97F4A7C15ull;
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDull;
  x ^= x >> 33;
  return static_cast<std::size_t>(x);
}

// Open-addressing set of packed points. All-ones is never a valid key.
template <class Key>
class FlatKeySet {
 public:
  static constexpr Key kEmpty = ~Key{0};

  FlatKeySet() : slots_(1024, kEmpty) {}
  std::size_t size() const { return size_; }

  bool insert(Key k) {
    if ((size_ + 1) * 2 > slots_.size()) grow();
    return place(slots_, k);
  }

 private:
  bool place(std::vector<Key>& s, Key k) {
    const std::size_t mask = s.size() - 1;
    for (std::size_t i = hash_key(k) & mask;; i = (i + 1) & mask) {
      if (s[i] == k) return false;
      if (s[i] == kEmpty) {
        s[i] = k;
        ++size_;
        return true;
      }
    }
  }
  void grow() {
    std::vector<Key> next(slots_.size() * 2, kEmpty);
    size_ = 0;
    for (Key k : slots_)
      if (k != kEmpty) place(next, k);
    slots_.swap(next);
  }

  std::vector<Key> slots_;
  std::size_t size_ = 0;
};

// Coordinates are stored offset by max_n in fixed-width fields, so adding a
// generator is one wrapping integer addition of its packed delta.
template <class Key>
ShellCounts run_bfs(const IntMatrix& gens, unsigned max_n, unsigned bits, const Budgets& budget) {
  const std::size_t d = gens.rows(), n = gens.cols();
  std::vector<Key> deltas(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    Key acc = 0;
    for (std::size_t r = 0; r < d; ++r) {
      const Key field = static_cast<Key>(static_cast<Key>(gens(r, c) < 0 ? -gens(r, c) : gens(r, c)))
                        << (bits * r);
      acc = gens(r, c) < 0 ? acc - field : acc + field;
    }
    deltas[c] = acc;
  }
  Key origin = 0;
  for (std::size_t r = 0; r < d; ++r) origin += static_cast<Key>(max_n) << (bits * r);

  ShellCounts out;
  out.max_n = max_n;
  out.counts.push_back(1);
  FlatKeySet<Key> visited;
  visited.insert(origin);
  std::vector<Key> frontier{origin}, next;
  for (unsigned step = 1; step <= max_n; ++step) {
    next.clear();
    for (Key x : frontier)
      for (Key dlt : deltas) {
        const Key y = x + dlt;
        if (visited.insert(y)) next.push_back(y);
      }
    if (visited.size() > budget.bfs_max_points) {
      throw BfsBudgetExceeded("bfs_shells: more than " + std::to_string(budget.bfs_max_points) +
                                  " points by shell " + std::to_string(step),
                              out);
    }
    out.counts.push_back(next.size());
    frontier.swap(next);
  }
  return out;
}

}  // namespace

ShellCounts bfs_shells(const IntMatrix& generators, unsigned max_n, const Budgets& budget) {
  for (auto x : generators.data())
    if (x < -1 || x > 1) throw std::invalid_argument("bfs_shells: generator entries must be in {-1,0,1}");
  const auto bits = static_cast<unsigned>(std::bit_width(2u * max_n));
  const std::size_t total = std::max(1u, bits) * generators.rows();
  if (total <= 64) return run_bfs<std::uint64_t>(generators, max_n, std::max(1u, bits), budget);
  if (total <= 128) return run_bfs<u128>(generators, max_n, std::max(1u, bits), budget);
  throw BudgetExceeded("bfs_shells: packed coordinates need more than 128 bits");
}

bool shells_match_polynomial(const ShellCounts& shells, const IntPolynomial& h, unsigned d) {
  const auto expect = series_coeffs(h, d, shells.max_n);
  if (expect.size() != shells.counts.size()) return false;
  for (std::size_t i = 0; i < expect.size(); ++i)
    if (expect[i] != static_cast<unsigned long>(shells.counts[i])) return false;
  return true;
}

IntPolynomial fit_polynomial(const ShellCounts& shells, unsigned d) {
  if (shells.counts.size() < d + 1) {
    throw std::invalid_argument("fit_polynomial: need shells 0.." + std::to_string(d));
  }
  std::vector<BigInt> h(d + 1, 0);
  for (unsigned j = 0; j <= d; ++j)
    for (unsigned i = 0; i <= j; ++i) {
      BigInt term = binomial(d, i) * static_cast<unsigned long>(shells.counts[j - i]);
      if (i % 2) h[j] -= term;
      else h[j] += term;
    }
  return IntPolynomial(std::move(h));
}

std::uint64_t dilate_point_count(const std::vector<Facet>& facets, std::size_t dim, std::int64_t k,
                                 const Budgets& budget) {
  if (k < 0) throw std::invalid_argument("dilate_point_count: k must be nonnegative");
  const std::uint64_t side = static_cast<std::uint64_t>(2 * k + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > budget.dilate_max_candidates / side) {
      throw BudgetExceeded("dilate_point_count: (2k+1)^dim exceeds the candidate budget");
    }
    total *= side;
  }
  std::vector<std::int64_t> coeffs, bounds;
  for (const auto& f : facets) {
    coeffs.insert(coeffs.end(), f.normal.numerators().begin(), f.normal.numerators().end());
    bounds.push_back(f.normal.denominator());
  }
  const simd::LinearForms forms(facets.size(), dim, coeffs, bounds);
  if (!forms.fits(k, k)) throw std::overflow_error("dilate_point_count: values exceed int32");

  const auto& kern = simd::active();
  const auto kk = static_cast<std::int32_t>(k);
  std::vector<std::int32_t> x(dim, -kk);
  std::uint64_t count = 0;
  while (true) {
    count += kern.all_within(forms, x.data(), kk);
    std::size_t i = 0;
    while (i < dim && x[i] == kk) x[i++] = -kk;
    if (i == dim) break;
    ++x[i];
  }
  return count;
}

NormalityReport normality_check(const VertexMatrix& v, const std::vector<Facet>& facets, unsigned max_k,
                                const Budgets& budget) {
  NormalityReport rep;
  const auto shells = bfs_shells(v, max_k, budget);
  std::uint64_t ball = 0;
  for (unsigned k = 0; k <= max_k; ++k) {
    ball += shells.counts[k];
    rep.ball_sizes.push_back(ball);
    rep.dilate_counts.push_back(dilate_point_count(facets, v.dim, k, budget));
    rep.normal = rep.normal && rep.ball_sizes.back() == rep.dilate_counts.back();
  }
  return rep;
}

void write_shells_csv(std::ostream& os, const ShellCounts& s) {
  os << "n,count\n";
  for (std::size_t n = 0; n < s.counts.size(); ++n) os << n << ',' << s.counts[n] << '\n';
}

}  // namespace cyclolat
