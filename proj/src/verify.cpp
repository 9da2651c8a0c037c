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

#include "cyclolat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "cyclolat/closed_forms.hpp"
#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/faces.hpp"
#include "cyclolat/growth.hpp"
#include "cyclolat/hull.hpp"
#include "cyclolat/transport.hpp"
#include "cyclolat/tu.hpp"

namespace cyclolat {

namespace detail {
extern const std::string_view kFixturesJson;
}

namespace {

using nlohmann::json;

IntPolynomial poly_from(const json& a) {
  std::vector<BigInt> c;
  for (const auto& x : a) c.emplace_back(x.get<long>());
  return IntPolynomial(std::move(c));
}

IntPolynomial coordinator_row(const json& row) {
  if (row.contains("h")) return poly_from(row.at("h"));
  if (row.contains("base")) return poly_pow(poly_from(row.at("base")), row.at("power").get<unsigned>());
  if (row.contains("lower")) {
    const auto lower = row.at("lower").get<std::vector<long>>();
    const auto degree = row.at("degree").get<std::size_t>();
    if (lower.size() != degree / 2 + 1) throw std::invalid_argument("fixture row: lower half has the wrong length");
    std::vector<BigInt> c(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i) c[i] = lower[std::min(i, degree - i)];
    return IntPolynomial(std::move(c));
  }
  throw std::invalid_argument("fixture row without coefficients");
}

bool full_only(const json& row) { return row.value("scope", std::string("fast")) == "full"; }

}  // namespace

Fixtures Fixtures::parse(std::string_view text) {
  Fixtures f;
  try {
    const json j = json::parse(text);
    for (const auto& r : j.at("coordinator")) {
      f.coordinator.push_back({r.at("id").get<std::string>(), r.at("m").get<long>(), coordinator_row(r),
                               full_only(r), r.value("source", std::string())});
    }
    for (const auto& r : j.at("facet_counts")) {
      FacetCount fc{r.at("id").get<std::string>(), r.at("m").get<long>(), r.at("count").get<std::size_t>(), {},
                    full_only(r), r.value("source", std::string())};
      if (r.contains("by_size"))
        for (const auto& [k, v] : r.at("by_size").items()) fc.by_size[std::stoul(k)] = v.get<std::size_t>();
      f.facet_counts.push_back(std::move(fc));
    }
    f.two_p_primes = j.at("two_p").at("primes").get<std::vector<long>>();
    f.two_p_source = j.at("two_p").value("source", std::string());
    for (const auto& r : j.at("bfs"))
      f.bfs.push_back({r.at("id").get<std::string>(), r.at("m").get<long>(), r.at("max_n").get<unsigned>()});
    for (const auto& r : j.at("duality")) {
      f.duality.push_back({r.at("id").get<std::string>(), r.at("p").get<long>(), r.at("q").get<long>(),
                           r.at("vertices").get<std::size_t>(), r.at("trees").get<std::uint64_t>(),
                           r.value("source", std::string())});
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("fixtures: ") + e.what());
  }
  return f;
}

const Fixtures& Fixtures::embedded() {
  static const Fixtures f = parse(detail::kFixturesJson);
  return f;
}

std::optional<Scope> parse_scope(std::string_view s) {
  if (s == "fast") return Scope::kFast;
  if (s == "full") return Scope::kFull;
  return std::nullopt;
}

bool VerificationReport::pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

std::string coeff_list(const IntPolynomial& h) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) s += (i ? "," : "") + h.coeffs()[i].get_str();
  return s + "]";
}

namespace {

class Runner {
 public:
  Runner(Scope scope, const Budgets& budget) : full_(scope == Scope::kFull), budget_(budget) {}

  bool full() const { return full_; }

  // `compute` returns the computed value as a string; the check passes when
  // it equals `expected`.
  void check(std::string id, long m, std::string expected, const std::function<std::string()>& compute,
             std::string source = {}) {
    CheckRecord r{std::move(id), m, std::move(expected), {}, false, 0, std::move(source)};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.computed = compute();
      r.pass = r.computed == r.expected;
    } catch (const std::exception& e) {
      r.computed = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report_.records.push_back(std::move(r));
  }

  const std::vector<Facet>& facets(long m) {
    auto it = facets_.find(m);
    if (it == facets_.end()) it = facets_.emplace(m, enumerate_facets(build(m), budget_)).first;
    return it->second;
  }

  const Triangulation& triangulation(long m) {
    auto it = tris_.find(m);
    if (it == tris_.end()) it = tris_.emplace(m, pulling_triangulation(build(m).matrix, facets(m))).first;
    return it->second;
  }

  const Budgets& budget() const { return budget_; }
  VerificationReport take() { return std::move(report_); }

 private:
  bool full_;
  Budgets budget_;
  VerificationReport report_;
  std::map<long, std::vector<Facet>> facets_;
  std::map<long, Triangulation> tris_;
};

std::string h_or_note(const ClosedFormResult& r) { return r.h ? coeff_list(*r.h) : "unavailable: " + r.note; }

std::string bool_str(bool b) { return b ? "true" : "false"; }

void coordinator_checks(Runner& run, const Fixtures& fx) {
  for (const auto& row : fx.coordinator) {
    if (row.full_only && !run.full()) continue;
    run.check(row.id, row.m, coeff_list(row.h),
              [&] { return h_or_note(coordinator(row.m, Strategy::kAuto, run.budget())); }, row.source);
  }
  for (long p = 2; p <= 41; ++p) {
    if (!is_prime(p)) continue;
    const IntPolynomial ones(std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(1)));
    run.check("prime.m" + std::to_string(p), p, coeff_list(ones),
              [&] { return h_or_note(coordinator(p, Strategy::kAuto, run.budget())); });
    for (long m = p * p; m <= 41; m *= p) {
      const IntPolynomial expected = poly_pow(ones, static_cast<unsigned>(m / p));
      run.check("prime_power.m" + std::to_string(m), m, coeff_list(expected),
                [&] { return h_or_note(coordinator(m, Strategy::kAuto, run.budget())); });
    }
  }
}

void cross_checks(Runner& run) {
  for (long m : {6L, 10L, 12L, 14L, 15L}) {
    run.check("cross.m" + std::to_string(m), m, "agree", [&] {
      const auto c = coordinator(m, Strategy::kClosed, run.budget());
      const auto t = coordinator(m, Strategy::kTriangulation, run.budget());
      const auto b = coordinator(m, Strategy::kBfs, run.budget());
      if (!c.h || !t.h || !b.h) return std::string("missing pipeline result");
      if (*c.h == *t.h && *t.h == *b.h) return std::string("agree");
      return "closed " + coeff_list(*c.h) + " triangulation " + coeff_list(*t.h) + " bfs " + coeff_list(*b.h);
    });
  }
}

void bfs_checks(Runner& run, const Fixtures& fx) {
  for (const auto& b : fx.bfs) {
    // Compared with the computed polynomial; the table rows are checked once, elsewhere.
    const auto h = coordinator(b.m, Strategy::kAuto, run.budget()).h;
    std::string expected = "series unavailable";
    const auto d = static_cast<unsigned>(euler_phi(b.m));
    if (h) {
      expected.clear();
      for (const auto& c : series_coeffs(*h, d, b.max_n)) expected += (expected.empty() ? "" : ",") + c.get_str();
    }
    run.check(b.id, b.m, expected, [&] {
      std::string s;
      for (auto c : bfs_shells(build(b.m), b.max_n, run.budget()).counts) s += (s.empty() ? "" : ",") + std::to_string(c);
      return s;
    });
  }
}

std::string size_histogram(const std::vector<Facet>& fs) {
  std::map<int, std::size_t> hist;
  for (const auto& f : fs) ++hist[f.incident.size()];
  std::ostringstream os;
  os << fs.size();
  for (const auto& [k, v] : hist) os << " " << k << ":" << v;
  return os.str();
}

void facet_checks(Runner& run, const Fixtures& fx) {
  for (const auto& fc : fx.facet_counts) {
    if (fc.full_only && !run.full()) continue;
    if (fc.by_size.empty()) {
      run.check(fc.id, fc.m, std::to_string(fc.count), [&] { return std::to_string(run.facets(fc.m).size()); },
                fc.source);
    } else {
      std::ostringstream exp;
      exp << fc.count;
      for (const auto& [k, v] : fc.by_size) exp << " " << k << ":" << v;
      run.check(fc.id, fc.m, exp.str(), [&] { return size_histogram(run.facets(fc.m)); }, fc.source);
    }
  }
  for (long p : fx.two_p_primes) {
    if (p > (run.full() ? 11 : 7)) continue;
    run.check("facets.2p.p" + std::to_string(p), 2 * p, facet_count_2p(p).get_str(),
              [&] { return std::to_string(run.facets(2 * p).size()); }, fx.two_p_source);
  }
}

void face_formula_checks(Runner& run, const Fixtures& fx) {
  for (long p : fx.two_p_primes) {
    if (p > 7) continue;
    const long m = 2 * p;
    std::string expected;
    for (long k = 1; k <= (p - 1) / 2; ++k) expected += (k > 1 ? "," : "") + face_count_2p(p, k).get_str();
    run.check("faces.2p.p" + std::to_string(p), m, expected, [&] {
      const auto lat = build_face_lattice(build(m).matrix, run.facets(m), run.budget());
      const auto f = f_vector(lat);
      std::string s;
      for (long k = 1; k <= (p - 1) / 2; ++k) s += (k > 1 ? "," : "") + f[static_cast<std::size_t>(k)].get_str();
      return s;
    }, fx.two_p_source);
  }
}

// h from the f-vector of the face lattice, for the simplicial cases.
void lattice_checks(Runner& run, const Fixtures& fx) {
  for (const auto& row : fx.coordinator) {
    const long m = row.m;
    if (m != 6 && m != 10 && m != 14 && m != 15 && m != 21) continue;
    if (m == 21 && !run.full()) continue;
    const auto h = coordinator(m, Strategy::kAuto, run.budget()).h;
    run.check("face_lattice.m" + std::to_string(m), m, h ? coeff_list(*h) : "unavailable", [&] {
      const auto lat = build_face_lattice(build(m).matrix, run.facets(m), run.budget());
      const auto f = f_vector(lat);
      return coeff_list(h_from_f(f, lat.ambient_dim()));
    }, row.source);
  }
}

void tu_checks(Runner& run) {
  for (long m : {6L, 10L, 12L, 15L, 20L, 30L}) {
    run.check("tu.m" + std::to_string(m), m, "true",
              [&] { return bool_str(is_totally_unimodular(build(m).matrix, run.budget()).is_tu); });
    if (m == 30 && !run.full()) continue;
    run.check("unimodular.m" + std::to_string(m), m, "true",
              [&] { return bool_str(run.triangulation(m).unimodular); });
  }
  run.check("tu.certificate.5x7", 105, "split fails", [&] {
    const auto cols = tu_failure_certificate_3pq(5, 7);
    const auto a = build(105).matrix;
    return check_split_criterion(a, cols, run.budget()) ? std::string("split found") : std::string("split fails");
  });
}

void structural_checks(Runner& run) {
  std::vector<long> simplicial = {6, 10, 14, 15};
  if (run.full()) simplicial.push_back(21);
  for (long m : simplicial) {
    run.check("palindromic.m" + std::to_string(m), m, "true", [&] {
      const auto h = coordinator(m, Strategy::kAuto, run.budget());
      return bool_str(h.h && is_palindromic(*h.h) && is_simplicial(run.facets(m), static_cast<std::size_t>(euler_phi(m))));
    });
    run.check("h_at_one.m" + std::to_string(m), m, std::to_string(run.facets(m).size()), [&] {
      const auto h = coordinator(m, Strategy::kAuto, run.budget());
      return h.h ? h.h->eval(1).get_str() : std::string("unavailable");
    });
  }
  if (run.full()) {
    run.check("h_at_one.m30", 30, "3690", [&] {
      const auto& tri = run.triangulation(30);
      const auto h = boundary_h_polynomial(tri, 8).h;
      if (h.eval(1) != BigInt(static_cast<long>(tri.cells.size()))) return std::string("cell count differs");
      return h.eval(1).get_str();
    });
  }
  for (long m : {6L, 10L, 12L, 14L, 15L, 20L, 30L}) {
    run.check("reflexive.m" + std::to_string(m), m, "true", [&] { return bool_str(is_reflexive(run.facets(m))); });
  }
  for (long m = 2; m <= 21; ++m) {
    if (euler_phi(m) > 10) continue;
    run.check("lattice_points.m" + std::to_string(m), m, "true",
              [&] { return bool_str(verify_lattice_points(build(m), run.facets(m), run.budget())); });
  }
}

void duality_checks(Runner& run, const Fixtures& fx) {
  for (const auto& d : fx.duality) {
    std::ostringstream exp;
    exp << "ok " << d.vertices << " vertices " << d.trees << " trees";
    run.check(d.id, d.p * d.q, exp.str(), [&] {
      const auto rep = verify_duality(d.p, d.q, run.budget());
      if (!rep.ok) return "failed: " + rep.failure;
      std::ostringstream os;
      os << "ok " << rep.vertex_count << " vertices " << rep.spanning_trees << " trees";
      return os.str();
    }, d.source);
  }
}

void normality_checks(Runner& run) {
  for (long m : {6L, 10L, 12L}) {
    run.check("normal.m" + std::to_string(m), m, "true",
              [&] { return bool_str(normality_check(build(m), run.facets(m), 3, run.budget()).normal); });
  }
}

}  // namespace

VerificationReport run_verification(Scope scope, const Fixtures& fixtures, const Budgets& budget) {
  Runner run(scope, budget);
  coordinator_checks(run, fixtures);
  cross_checks(run);
  bfs_checks(run, fixtures);
  facet_checks(run, fixtures);
  face_formula_checks(run, fixtures);
  lattice_checks(run, fixtures);
  tu_checks(run);
  structural_checks(run);
  duality_checks(run, fixtures);
  normality_checks(run);
  return run.take();
}

}  // namespace cyclolat
