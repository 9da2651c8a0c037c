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

#include "cyclolat/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/faces.hpp"
#include "cyclolat/growth.hpp"
#include "cyclolat/hull.hpp"

namespace cyclolat {

IntPolynomial h_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("h_prime: " + std::to_string(p) + " is not prime");
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(1)));
}

IntPolynomial h_two_p(long p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("h_two_p: p must be an odd prime");
  const long half = (p - 1) / 2;
  std::vector<BigInt> h(static_cast<std::size_t>(p), 0);
  BigInt partial = 0;
  for (long k = 0; k <= half; ++k) {
    partial += binomial(p, k);
    h[static_cast<std::size_t>(k)] = partial;
    h[static_cast<std::size_t>(p - 1 - k)] = partial;
  }
  return IntPolynomial(std::move(h));
}

IntPolynomial h_fifteen() { return IntPolynomial{1, 7, 28, 79, 130, 79, 28, 7, 1}; }

BigInt face_count_2p(long p, long k) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("face_count_2p: p must be an odd prime");
  if (k < 1 || k > (p - 1) / 2) throw std::invalid_argument("face_count_2p: k outside 1..(p-1)/2");
  BigInt pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(k);
  return pow2 * binomial(p, k);
}

BigInt facet_count_2p(long p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("facet_count_2p: p must be an odd prime");
  return p * binomial(p - 1, (p - 1) / 2);
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kClosed: return "closed";
    case Strategy::kTriangulation: return "triangulation";
    case Strategy::kBfs: return "bfs";
    case Strategy::kAuto: return "auto";
  }
  return "?";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kPrime: return "prime";
    case Provenance::kTwoP: return "two_p";
    case Provenance::kFifteen: return "fifteen";
    case Provenance::kFactorPower: return "factor_power";
    case Provenance::kTable: return "table";
    case Provenance::kTriangulation: return "triangulation";
    case Provenance::kBfs: return "bfs";
    case Provenance::kUnavailable: return "unavailable";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
  for (auto st : {Strategy::kClosed, Strategy::kTriangulation, Strategy::kBfs, Strategy::kAuto})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

std::optional<IntPolynomial> coordinator_by_triangulation(long m, const Budgets& budget) {
  const VertexMatrix v = build(m);
  const auto facets = enumerate_facets(v, budget);
  const auto tri = pulling_triangulation(v.matrix, facets);
  auto bh = boundary_h_polynomial(tri, v.dim);
  if (!bh.certified) return std::nullopt;
  return std::move(bh.h);
}

IntPolynomial coordinator_by_bfs(long m, const Budgets& budget) {
  const VertexMatrix v = build(m);
  const auto d = static_cast<unsigned>(v.dim);
  return fit_polynomial(bfs_shells(v, d, budget), d);
}

namespace {

struct Partial {
  std::optional<IntPolynomial> h;
  Provenance provenance = Provenance::kUnavailable;
};

Partial closed_form_squarefree(long s) {
  if (is_prime(s)) return {h_prime(s), Provenance::kPrime};
  if (s % 2 == 0 && is_prime(s / 2) && s / 2 != 2) return {h_two_p(s / 2), Provenance::kTwoP};
  if (s == 15) return {h_fifteen(), Provenance::kFifteen};
  return {};
}

bool hull_feasible(long m, const Budgets& b) {
  return static_cast<std::size_t>(euler_phi(m)) <= b.hull_max_dim &&
         static_cast<std::size_t>(m) <= b.hull_max_vertices;
}

Partial by_triangulation(long m, const Budgets& b) {
  if (!hull_feasible(m, b)) return {};
  auto h = coordinator_by_triangulation(m, b);
  if (!h) return {};
  return {std::move(h), Provenance::kTriangulation};
}

ClosedFormResult finish(long m, const SquarefreeDecomposition& dec, Partial base, bool direct) {
  ClosedFormResult r;
  r.m = m;
  if (!base.h) return r;
  if (direct || dec.is_squarefree()) {
    r.h = std::move(base.h);
    r.provenance = base.provenance;
  } else {
    r.h = poly_pow(*base.h, static_cast<unsigned>(dec.power));
    r.provenance = Provenance::kFactorPower;
    r.base_provenance = base.provenance;
  }
  return r;
}

}  // namespace

ClosedFormResult coordinator(long m, Strategy strategy, const Budgets& budget) {
  const auto dec = squarefree_decompose(m);
  const long s = dec.sqrt_m;
  const auto odd_primes = std::count_if(dec.prime_factors.begin(), dec.prime_factors.end(),
                                        [](const auto& pe) { return pe.first != 2; });
  if (odd_primes >= 3) {
    ClosedFormResult r;
    r.m = m;
    r.note =
        "sqrt(m) has three or more odd prime factors: the vertex matrix is not totally unimodular "
        "(see `tu --m 105`), so no pipeline here certifies the coordinator polynomial";
    return r;
  }

  switch (strategy) {
    case Strategy::kClosed: {
      auto r = finish(m, dec, closed_form_squarefree(s), false);
      if (!r.h) r.note = "no closed form for sqrt(m) = " + std::to_string(s);
      return r;
    }
    case Strategy::kTriangulation: {
      if (hull_feasible(m, budget)) {
        auto direct = by_triangulation(m, budget);
        if (direct.h) return finish(m, dec, std::move(direct), true);
      }
      auto r = finish(m, dec, by_triangulation(s, budget), false);
      if (!r.h) r.note = "triangulation pipeline infeasible or not unimodular for sqrt(m) = " + std::to_string(s);
      return r;
    }
    case Strategy::kBfs: {
      try {
        return finish(m, dec, {coordinator_by_bfs(m, budget), Provenance::kBfs}, true);
      } catch (const BudgetExceeded&) {
        if (dec.is_squarefree()) throw;
      }
      return finish(m, dec, {coordinator_by_bfs(s, budget), Provenance::kBfs}, false);
    }
    case Strategy::kAuto: {
      Partial base = closed_form_squarefree(s);
      if (!base.h) base = by_triangulation(s, budget);
      if (!base.h) {
        try {
          base = {coordinator_by_bfs(s, budget), Provenance::kBfs};
        } catch (const BudgetExceeded&) {
        }
      }
      auto r = finish(m, dec, std::move(base), false);
      if (!r.h) r.note = "every pipeline is outside the budget for sqrt(m) = " + std::to_string(s);
      return r;
    }
  }
  return {};
}

}  // namespace cyclolat
