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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#ifndef CYCLOLAT_CLI
#error "CYCLOLAT_CLI must name the cyclolat binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + CYCLOLAT_CLI + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<long> csv_counts(const std::string& s) {
  std::istringstream is(s);
  std::string line;
  std::getline(is, line);
  std::vector<long> out;
  while (std::getline(is, line)) out.push_back(std::stol(line.substr(line.find(',') + 1)));
  return out;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("build --m 1").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("hvector --m 6 --strategy sideways").code, 2);
  EXPECT_EQ(run("growth --m 6 --max-n 5", "CYCLOLAT_BUDGET=points=10").code, 3);
  EXPECT_EQ(run("build --m 6").code, 0);
}

TEST(Cli, HVector) {
  auto r = run("hvector --m 20");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["h"], (std::vector<long>{1, 12, 68, 204, 330, 204, 68, 12, 1}));
  EXPECT_EQ(j["phi"], 8);
  EXPECT_EQ(j["palindromic"], true);
  r = run("hvector --m 3");
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["h"], (std::vector<long>{1, 1, 1}));
  r = run("hvector --m 105");
  ASSERT_EQ(r.code, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["provenance"], "unavailable");
  EXPECT_TRUE(j["h"].is_null());
  EXPECT_NE(j["note"].get<std::string>().find("not totally unimodular"), std::string::npos);
}

TEST(Cli, Growth) {
  EXPECT_EQ(csv_counts(run("growth --m 6 --max-n 3").out), (std::vector<long>{1, 6, 12, 18}));
  EXPECT_EQ(csv_counts(run("growth --m 2 --max-n 4").out), (std::vector<long>{1, 2, 2, 2, 2}));
  // h_15 / (1-x)^8 gives 1, 15, 8*9/2 + 7*8 + 28 = 120.
  EXPECT_EQ(csv_counts(run("growth --m 15 --max-n 2").out), (std::vector<long>{1, 15, 120}));
}

TEST(Cli, BuildText) {
  const auto r = run("build --m 15 --format text");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "8 15");
  EXPECT_EQ(run("build --m 2 --format text").out, "1 2\n1 -1\n");
}

TEST(Cli, Deterministic) {
  for (const char* a : {"facets --m 10", "hvector --m 15", "dual --m 10 --format csv", "tu --m 12"}) {
    const auto x = run(a), y = run(a);
    EXPECT_EQ(x.code, 0) << a;
    EXPECT_EQ(x.out, y.out) << a;
  }
}

TEST(Cli, JsonRoundTrip) {
  for (const char* a : {"facets --m 6", "hvector --m 12", "tu --m 6", "dual --m 6", "build --m 6", "closed-form --m 14"}) {
    const auto r = run(a);
    ASSERT_EQ(r.code, 0) << a;
    const auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(nlohmann::ordered_json::parse(j.dump()), j) << a;
    EXPECT_EQ(j.dump(2) + "\n", r.out) << a;
  }
}

TEST(Cli, TuAndDual) {
  auto j = nlohmann::json::parse(run("tu --m 105").out);
  EXPECT_EQ(j["is_tu"], false);
  j = nlohmann::json::parse(run("tu --m 30").out);
  EXPECT_EQ(j["is_tu"], true);
  const auto r = run("dual --m 15");
  ASSERT_EQ(r.code, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["vertices"], 360);
  EXPECT_EQ(run("dual --m 9").code, 2);
}

TEST(Cli, VerifyFast) {
  const auto r = run("verify --scope fast");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  const auto j = nlohmann::json::parse(run("verify --scope fast --format json").out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(run("verify --scope everything").code, 2);
}
