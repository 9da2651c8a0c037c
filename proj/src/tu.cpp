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

#include "cyclolat/tu.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "cyclolat/cyclotomic.hpp"

namespace cyclolat {
namespace {

// Connected components of the bipartite row/column nonzero graph.
struct Block {
  std::vector<std::size_t> rows, cols;
};

std::vector<Block> blocks_of(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<std::size_t> parent(r + c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (a(i, j) != 0) parent[find(i)] = find(r + j);

  std::vector<long> block_of(r + c, -1);
  std::vector<Block> out;
  for (std::size_t x = 0; x < r + c; ++x) {
    const std::size_t root = find(x);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<long>(out.size());
      out.emplace_back();
    }
    auto& b = out[static_cast<std::size_t>(block_of[root])];
    if (x < r) b.rows.push_back(x);
    else b.cols.push_back(x - r);
  }
  // Isolated rows or columns are all-zero and cannot break TU.
  std::erase_if(out, [](const Block& b) { return b.rows.empty() || b.cols.empty(); });
  return out;
}

// Brute force on a block with rows <= cols (caller transposes). Returns a
// witness in the block's own coordinates.
std::optional<SubmatrixWitness> first_bad_minor(const IntMatrix& b) {
  const std::size_t nr = b.rows(), nc = b.cols();
  // binom[n][k] for n <= nc, k <= nr
  std::vector<std::vector<std::size_t>> binom(nc + 1, std::vector<std::size_t>(nr + 2, 0));
  for (std::size_t n = 0; n <= nc; ++n) {
    binom[n][0] = 1;
    for (std::size_t k = 1; k <= std::min(n, nr + 1); ++k)
      binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0);
  }
  // Compact index of each row mask among masks with the same popcount.
  const std::size_t nmasks = std::size_t{1} << nr;
  std::vector<std::size_t> compact(nmasks);
  std::vector<std::vector<unsigned>> masks_by_pop(nr + 1);
  for (unsigned m = 0; m < nmasks; ++m) {
    const auto pc = static_cast<std::size_t>(std::popcount(m));
    compact[m] = masks_by_pop[pc].size();
    masks_by_pop[pc].push_back(m);
  }

  // Level 1: the entries themselves.
  std::vector<std::int8_t> prev(nr * nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) prev[i * nc + j] = static_cast<std::int8_t>(b(i, j));

  for (std::size_t k = 2; k <= nr; ++k) {
    const std::size_t ncols_prev = binom[nc][k - 1];
    const std::size_t ncols_cur = binom[nc][k];
    const auto& row_masks = masks_by_pop[k];
    std::vector<std::int8_t> cur(k < nr ? row_masks.size() * ncols_cur : 0);

    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t rank = 0; rank < ncols_cur; ++rank) {
      const std::size_t last = c[k - 1];
      const std::size_t sub_rank = rank - binom[last][k];
      for (std::size_t ri = 0; ri < row_masks.size(); ++ri) {
        const unsigned mask = row_masks[ri];
        long det = 0;
        std::size_t pos = 0;
        for (unsigned bits = mask; bits != 0; bits &= bits - 1, ++pos) {
          const auto r = static_cast<std::size_t>(std::countr_zero(bits));
          const std::int64_t e = b(r, last);
          if (e == 0) continue;
          const std::size_t sub = compact[mask & ~(1u << r)];
          const long minor = prev[sub * ncols_prev + sub_rank];
          det += ((pos + k - 1) % 2 ? -1 : 1) * e * minor;
        }
        if (det > 1 || det < -1) {
          SubmatrixWitness w;
          for (unsigned bits = mask; bits != 0; bits &= bits - 1)
            w.rows.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
          w.cols = c;
          w.det = det;
          return w;
        }
        if (!cur.empty()) cur[ri * ncols_cur + rank] = static_cast<std::int8_t>(det);
      }
      // next combination in colex order
      std::size_t i = 0;
      while (i + 1 < k && c[i] + 1 == c[i + 1]) ++i;
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
    }
    prev = std::move(cur);
  }
  return std::nullopt;
}

void require_ternary(const IntMatrix& a, const char* who) {
  for (auto x : a.data())
    if (x < -1 || x > 1) throw std::invalid_argument(std::string(who) + ": entries must be in {-1,0,1}");
}

}  // namespace

TUVerdict is_totally_unimodular(const IntMatrix& a, const Budgets& budget) {
  require_ternary(a, "is_totally_unimodular");
  TUVerdict verdict;
  for (const Block& blk : blocks_of(a)) {
    IntMatrix sub = a.submatrix(blk.rows, blk.cols);
    const bool transpose = sub.rows() > sub.cols();
    if (transpose) sub = sub.transposed();
    if (sub.rows() > budget.tu_max_small_side || sub.cols() > budget.tu_max_cols) {
      throw BudgetExceeded("is_totally_unimodular: block of size " + std::to_string(sub.rows()) + "x" +
                           std::to_string(sub.cols()) + " exceeds the submatrix budget");
    }
    auto w = first_bad_minor(sub);
    if (!w) continue;
    if (transpose) std::swap(w->rows, w->cols);
    for (auto& r : w->rows) r = blk.rows[r];
    for (auto& c : w->cols) c = blk.cols[c];
    verdict.is_tu = false;
    verdict.submatrix = std::move(*w);
    return verdict;
  }
  return verdict;
}

std::optional<std::vector<int>> check_split_criterion(const IntMatrix& a, std::span<const std::size_t> cols,
                                                      const Budgets& budget) {
  require_ternary(a, "check_split_criterion");
  const std::size_t k = cols.size();
  if (k > budget.split_max_cols) {
    throw BudgetExceeded("check_split_criterion: " + std::to_string(k) + " columns exceeds the split budget");
  }
  if (k == 0) return std::vector<int>{};
  for (auto c : cols)
    if (c >= a.cols()) throw std::out_of_range("check_split_criterion: column index out of range");

  // Gray-code walk over the signs of columns 1..k-1; `bad` counts rows with
  // |sum| > 1.
  const std::size_t rows = a.rows();
  std::vector<int> sign(k, 1);
  std::vector<long> sum(rows, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t r = 0; r < rows; ++r) sum[r] += a(r, cols[j]);
  long bad = 0;
  for (auto s : sum) bad += (s > 1 || s < -1);
  const std::uint64_t steps = std::uint64_t{1} << (k - 1);
  for (std::uint64_t g = 1;; ++g) {
    if (bad == 0) return sign;
    if (g == steps) break;
    const auto j = static_cast<std::size_t>(std::countr_zero(g)) + 1;
    sign[j] = -sign[j];
    for (std::size_t r = 0; r < rows; ++r) {
      const std::int64_t e = a(r, cols[j]);
      if (e == 0) continue;
      const long before = sum[r];
      sum[r] += 2 * sign[j] * e;
      bad += (sum[r] > 1 || sum[r] < -1) - (before > 1 || before < -1);
    }
  }
  return std::nullopt;
}

std::array<std::size_t, 3> tu_failure_certificate_3pq(long p, long q) {
  if (!is_prime(p) || !is_prime(q) || p <= 3 || q <= 3 || p == q) {
    throw std::invalid_argument("tu_failure_certificate_3pq: p and q must be distinct primes > 3");
  }
  const VertexMatrix a = build(3 * p * q);
  // Columns of build(3pq) are indexed (i3, i_small, i_large) with the
  // factors C_3, C_min(p,q), C_max(p,q) in ascending order. Within C_r,
  // index 0 is e_0 and index r-1 is the all-minus-ones column.
  const long lo = std::min(p, q), hi = std::max(p, q);
  auto index = [&](long i3, long ip, long iq) {
    const long i_lo = p < q ? ip : iq;
    const long i_hi = p < q ? iq : ip;
    return static_cast<std::size_t>((i3 * lo + i_lo) * hi + i_hi);
  };
  const std::array<std::size_t, 3> cert{
      index(1, p - 1, q - 1),  // (0 ; 1)
      index(2, 0, q - 1),      // (u ; u)
      index(2, p - 1, 0),      // (t ; t)
  };
  if (check_split_criterion(a.matrix, cert)) {
    throw std::logic_error("tu_failure_certificate_3pq: certificate columns admit a valid split");
  }
  return cert;
}

}  // namespace cyclolat
