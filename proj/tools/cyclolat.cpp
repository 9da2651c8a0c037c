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

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cyclolat/closed_forms.hpp"
#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/faces.hpp"
#include "cyclolat/growth.hpp"
#include "cyclolat/hull.hpp"
#include "cyclolat/transport.hpp"
#include "cyclolat/tu.hpp"
#include "cyclolat/verify.hpp"

namespace {

using cyclolat::BigInt;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kBudget = 3 };

struct Options {
  long m = 0;
  unsigned max_n = 4;
  std::string strategy = "auto";
  std::string format = "json";
  std::string scope = "fast";
};

ordered_json big(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ordered_json coeffs_json(const cyclolat::IntPolynomial& h) {
  ordered_json a = ordered_json::array();
  for (const auto& c : h.coeffs()) a.push_back(big(c));
  return a;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

void require_format(const Options& o, std::initializer_list<std::string_view> ok) {
  for (auto f : ok)
    if (o.format == f) return;
  throw std::invalid_argument("format '" + o.format + "' is not supported by this command");
}

int cmd_build(const Options& o) {
  require_format(o, {"json", "text", "csv"});
  const auto v = cyclolat::build(o.m);
  if (o.format == "text") {
    cyclolat::write_matrix_text(std::cout, v.matrix);
  } else if (o.format == "csv") {
    for (std::size_t r = 0; r < v.matrix.rows(); ++r) {
      for (std::size_t c = 0; c < v.matrix.cols(); ++c) std::cout << (c ? "," : "") << v.matrix(r, c);
      std::cout << '\n';
    }
  } else {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < v.matrix.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < v.matrix.cols(); ++c) row.push_back(v.matrix(r, c));
      rows.push_back(row);
    }
    emit({{"m", v.m}, {"dim", v.dim}, {"labels", v.labels}, {"rows", rows}});
  }
  return kOk;
}

int cmd_facets(const Options& o, const cyclolat::Budgets& b) {
  require_format(o, {"json", "text", "csv"});
  const auto v = cyclolat::build(o.m);
  const auto facets = cyclolat::enumerate_facets(v, b);
  if (o.format == "text") {
    cyclolat::write_facets_text(std::cout, facets);
  } else if (o.format == "csv") {
    std::cout << "denominator";
    for (std::size_t i = 0; i < v.dim; ++i) std::cout << ",a" << i;
    std::cout << ",incident\n";
    for (const auto& f : facets) {
      std::cout << f.normal.denominator();
      for (auto a : f.normal.numerators()) std::cout << ',' << a;
      std::cout << ',';
      const auto idx = f.incident.indices();
      for (std::size_t i = 0; i < idx.size(); ++i) std::cout << (i ? " " : "") << idx[i];
      std::cout << '\n';
    }
  } else {
    ordered_json fs = ordered_json::array();
    for (const auto& f : facets) {
      fs.push_back({{"normal", f.normal.numerators()},
                    {"denominator", f.normal.denominator()},
                    {"incident", f.incident.indices()}});
    }
    emit({{"m", o.m},
          {"dim", v.dim},
          {"count", facets.size()},
          {"simplicial", cyclolat::is_simplicial(facets, v.dim)},
          {"reflexive", cyclolat::is_reflexive(facets)},
          {"facets", fs}});
  }
  return kOk;
}

int emit_coordinator(const Options& o, cyclolat::Strategy s, const cyclolat::Budgets& b) {
  require_format(o, {"json", "text"});
  const auto r = cyclolat::coordinator(o.m, s, b);
  if (o.format == "text") {
    if (r.h)
      std::cout << r.h->to_string() << '\n';
    else
      std::cout << "unavailable: " << r.note << '\n';
    return kOk;
  }
  ordered_json j = {{"m", o.m}, {"phi", cyclolat::euler_phi(o.m)}};
  j["h"] = r.h ? coeffs_json(*r.h) : ordered_json(nullptr);
  j["provenance"] = std::string(cyclolat::to_string(r.provenance));
  j["palindromic"] = r.h ? ordered_json(cyclolat::is_palindromic(*r.h)) : ordered_json(nullptr);
  if (r.base_provenance) j["base_provenance"] = std::string(cyclolat::to_string(*r.base_provenance));
  if (!r.note.empty()) j["note"] = r.note;
  emit(j);
  return kOk;
}

int cmd_hvector(const Options& o, const cyclolat::Budgets& b) {
  const auto s = cyclolat::parse_strategy(o.strategy);
  if (!s) throw std::invalid_argument("unknown strategy '" + o.strategy + "'");
  return emit_coordinator(o, *s, b);
}

void emit_shells(const Options& o, const cyclolat::ShellCounts& s) {
  if (o.format == "csv") {
    cyclolat::write_shells_csv(std::cout, s);
  } else if (o.format == "text") {
    for (std::size_t n = 0; n < s.counts.size(); ++n) std::cout << (n ? "," : "") << s.counts[n];
    std::cout << '\n';
  } else {
    emit({{"m", o.m}, {"max_n", s.max_n}, {"counts", s.counts}});
  }
}

int cmd_growth(const Options& o, const cyclolat::Budgets& b) {
  require_format(o, {"json", "text", "csv"});
  try {
    emit_shells(o, cyclolat::bfs_shells(cyclolat::build(o.m), o.max_n, b));
  } catch (const cyclolat::BfsBudgetExceeded& e) {
    emit_shells(o, e.partial());
    throw;
  }
  return kOk;
}

// 3pq with p, q distinct primes > 3.
std::optional<std::pair<long, long>> three_pq(long m) {
  if (m % 3 != 0) return std::nullopt;
  const long r = m / 3;
  for (long p = 5; p * p < r; ++p)
    if (r % p == 0 && cyclolat::is_prime(p) && cyclolat::is_prime(r / p) && r / p != p) return std::pair{p, r / p};
  return std::nullopt;
}

int cmd_tu(const Options& o, const cyclolat::Budgets& b) {
  require_format(o, {"json", "text"});
  const auto v = cyclolat::build(o.m);
  cyclolat::TUVerdict verdict;
  std::string method = "minors";
  try {
    verdict = cyclolat::is_totally_unimodular(v.matrix, b);
  } catch (const cyclolat::BudgetExceeded&) {
    const auto pq = three_pq(o.m);
    if (!pq) throw;
    const auto cols = cyclolat::tu_failure_certificate_3pq(pq->first, pq->second);
    verdict.is_tu = false;
    verdict.split_violation = std::vector<std::size_t>(cols.begin(), cols.end());
    method = "split_certificate";
  }
  if (o.format == "text") {
    std::cout << (verdict.is_tu ? "totally unimodular" : "not totally unimodular") << '\n';
    if (verdict.submatrix) std::cout << "det " << verdict.submatrix->det.get_str() << '\n';
    if (verdict.split_violation) {
      std::cout << "columns without a split:";
      for (auto c : *verdict.split_violation) std::cout << ' ' << c;
      std::cout << '\n';
    }
    return kOk;
  }
  ordered_json j = {{"m", o.m}, {"is_tu", verdict.is_tu}, {"method", method}};
  if (verdict.submatrix) {
    j["witness"] = {{"rows", verdict.submatrix->rows},
                    {"cols", verdict.submatrix->cols},
                    {"det", big(verdict.submatrix->det)}};
  }
  if (verdict.split_violation) j["split_violation"] = *verdict.split_violation;
  emit(j);
  return kOk;
}

int cmd_dual(const Options& o, const cyclolat::Budgets& b) {
  require_format(o, {"json", "csv"});
  const auto dec = cyclolat::squarefree_decompose(o.m);
  const auto primes = dec.primes();
  if (!dec.is_squarefree() || primes.size() != 2) throw std::invalid_argument("dual needs m = pq with p < q primes");
  const long p = primes[0], q = primes[1];
  if (o.format == "csv") {
    cyclolat::write_vertices_csv(std::cout, cyclolat::enumerate_vertices_2d(p, q, b).vertices);
    return kOk;
  }
  const auto rep = cyclolat::verify_duality(p, q, b);
  ordered_json j = {{"p", p},
                    {"q", q},
                    {"ok", rep.ok},
                    {"vertices", rep.vertex_count},
                    {"facets", rep.facet_count},
                    {"spanning_trees", rep.spanning_trees}};
  if (!rep.ok) j["failure"] = rep.failure;
  emit(j);
  return rep.ok ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& o, const cyclolat::Budgets& b) {
  require_format(o, {"json", "text"});
  const auto scope = cyclolat::parse_scope(o.scope);
  if (!scope) throw std::invalid_argument("unknown scope '" + o.scope + "'");
  const auto rep = cyclolat::run_verification(*scope, cyclolat::Fixtures::embedded(), b);
  if (o.format == "text") {
    for (const auto& r : rep.records) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.id << " m=" << r.m;
      if (!r.pass) std::cout << "  expected " << r.expected << "  computed " << r.computed;
      std::cout << "  (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)\n";
    }
    std::cout << (rep.pass() ? "PASS" : "FAIL") << ": " << rep.records.size() - rep.failures() << "/"
              << rep.records.size() << " checks\n";
  } else {
    ordered_json recs = ordered_json::array();
    for (const auto& r : rep.records) {
      recs.push_back({{"id", r.id},
                      {"m", r.m},
                      {"expected", r.expected},
                      {"computed", r.computed},
                      {"status", r.pass ? "pass" : "fail"},
                      {"elapsed_ms", r.elapsed_ms},
                      {"source", r.source}});
    }
    emit({{"scope", o.scope}, {"pass", rep.pass()}, {"records", recs}});
  }
  return rep.pass() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclotomic polytopes, coordinator polynomials and their certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  auto add_m = [&](CLI::App* c) { c->add_option("--m", o.m, "cyclotomic order m >= 2")->required(); };
  std::uint64_t budget_points = 0;
  app.add_option("--budget-points", budget_points, "maximum BFS visited points");

  auto* build = app.add_subcommand("build", "vertex matrix A_m");
  add_m(build);
  build->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  auto* facets = app.add_subcommand("facets", "facets of C_m");
  add_m(facets);
  facets->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  auto* hvector = app.add_subcommand("hvector", "coordinator polynomial");
  add_m(hvector);
  hvector->add_option("--strategy", o.strategy, "closed, triangulation, bfs or auto")
      ->check(CLI::IsMember({"closed", "triangulation", "bfs", "auto"}));
  hvector->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  auto* closed = app.add_subcommand("closed-form", "coordinator polynomial from closed forms only");
  add_m(closed);
  closed->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  auto* growth = app.add_subcommand("growth", "coordination sequence S(0..max-n) by BFS");
  add_m(growth);
  growth->add_option("--max-n", o.max_n, "largest word length");
  std::string growth_format = "csv";
  growth->add_option("--format", growth_format)->check(CLI::IsMember({"json", "csv", "text"}));
  auto* tu = app.add_subcommand("tu", "total unimodularity of A_m");
  add_m(tu);
  tu->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  auto* dual = app.add_subcommand("dual", "transportation polytope duality for m = pq");
  add_m(dual);
  dual->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  auto* verify = app.add_subcommand("verify", "replay the fixture values");
  verify->add_option("--scope", o.scope, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  std::string verify_format = "text";
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    auto b = cyclolat::Budgets::from_env();
    if (budget_points) b.bfs_max_points = budget_points;
    if (*build) return cmd_build(o);
    if (*facets) return cmd_facets(o, b);
    if (*hvector) return cmd_hvector(o, b);
    if (*closed) return emit_coordinator(o, cyclolat::Strategy::kClosed, b);
    if (*growth) {
      o.format = growth_format;
      return cmd_growth(o, b);
    }
    if (*tu) return cmd_tu(o, b);
    if (*dual) return cmd_dual(o, b);
    if (*verify) {
      o.format = verify_format;
      return cmd_verify(o, b);
    }
  } catch (const cyclolat::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kInvalid;
}
