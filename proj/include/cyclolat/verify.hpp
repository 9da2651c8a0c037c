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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclolat/budget.hpp"
#include "cyclolat/exact.hpp"

namespace cyclolat {

/// Expected values with their source annotations, parsed from
/// data/fixtures.json (embedded at build time).
struct Fixtures {
  struct Coordinator {
    std::string id;
    long m = 0;
    IntPolynomial h;
    bool full_only = false;
    std::string source;
  };
  struct FacetCount {
    std::string id;
    long m = 0;
    std::size_t count = 0;
    std::map<std::size_t, std::size_t> by_size;  // incident-vertex count -> facets
    bool full_only = false;
    std::string source;
  };
  struct Bfs {
    std::string id;
    long m = 0;
    unsigned max_n = 0;
  };
  struct Duality {
    std::string id;
    long p = 0, q = 0;
    std::size_t vertices = 0;
    std::uint64_t trees = 0;
    std::string source;
  };

  std::vector<Coordinator> coordinator;
  std::vector<FacetCount> facet_counts;
  std::vector<long> two_p_primes;
  std::string two_p_source;
  std::vector<Bfs> bfs;
  std::vector<Duality> duality;

  /// Throws std::invalid_argument on malformed input.
  static Fixtures parse(std::string_view json);
  static const Fixtures& embedded();
};

enum class Scope { kFast, kFull };
std::optional<Scope> parse_scope(std::string_view s);

struct CheckRecord {
  std::string id;
  long m = 0;
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0;
  std::string source;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  bool pass() const;
  std::size_t failures() const;
};

/// Replays the fixture values and the structural checks. The fast scope
/// skips the m=21 face lattice and everything that needs the m=30
/// pulling triangulation. Failures, including exceptions, become records.
VerificationReport run_verification(Scope scope, const Fixtures& fixtures = Fixtures::embedded(),
                                    const Budgets& budget = {});

/// "[c0,c1,...]"
std::string coeff_list(const IntPolynomial& h);

}  // namespace cyclolat
