// Copyright 2026 The mres Authors
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

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mres/io.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(MRES_CLI) + " " + args;
  if (!input.empty()) {
    const std::string path = std::string(MRES_TEST_DIR) + "/cli_input.json";
    std::ofstream(path) << input;
    cmd += " < " + path;
  }
  cmd += " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const char* kMonomial =
    R"({"degrees": [1, 1, 2], "mode": "integer", "polys": [[{"e": [1, 0, 0], "c": "1"}],
        [{"e": [0, 1, 0], "c": "1"}], [{"e": [0, 0, 2], "c": "1"}]]})";

}  // namespace

TEST_CASE("sizes") {
  auto r = run("sizes --degrees 2,3,4,5");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  const auto& row = j["result"]["rows"][0];
  CHECK(row["critical_degree"] == 10);
  CHECK(row["min_size"] == 90);
  CHECK(row["classical_size"] == 364);

  auto t = run("sizes --table --format text");
  REQUIRE(t.status == 0);
  CHECK(t.out.find("(10,70)\t39\t70\t80") != std::string::npos);
  CHECK(t.out.find("(1,1,2)\t0\t3\t6") != std::string::npos);
}

TEST_CASE("resultants") {
  auto r = run("resultant -", kMonomial);
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "resultant");
  CHECK(j["mode"] == "integer");
  CHECK(j["result"]["value"] == "1");
  CHECK_FALSE(j.contains("timing_ms"));

  auto g = run("resultant - --format text", R"({"degrees": [1, 1]})");
  REQUIRE(g.status == 0);
  CHECK(g.out.find("result.value: a_1_1*a_2_2 - a_1_2*a_2_1") != std::string::npos);

  auto timed = run("resultant - --timing", kMonomial);
  CHECK(nlohmann::json::parse(timed.out).dump().find("timing_ms") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const char* cmd : {"resultant -", "matrix - --t 2", "bezoutian - --t 0", "gcp - --t 3"}) {
    auto a = run(cmd, R"({"degrees": [1, 1, 2]})");
    auto b = run(cmd, R"({"degrees": [1, 1, 2]})");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("matrix output") {
  auto r = run("matrix - --t 2", kMonomial);
  REQUIRE(r.status == 0);
  auto m = mres::io::Json::parse(r.out)["result"];
  CHECK(m["size"] == mres::io::Json::array({6, 6}));
  CHECK(m["rows"].size() == 6);
  CHECK(m["cols"].size() == 6);
  auto back = mres::io::matrix_from_json<mres::Integer>(m, nullptr);
  CHECK(back.entries.rows() == 6);
  CHECK(abs(mres::bareiss_det(back.entries)) == 1);
  CHECK(m["extraneous"]["rows"] == mres::io::Json::array({"X^[1,1,0]"}));
  CHECK(m["extraneous"]["cols"] == mres::io::Json::array({"X^[0,1,0]*f1"}));
}

TEST_CASE("exit codes") {
  CHECK(run("bogus").status == 1);
  CHECK(run("resultant /nonexistent/input.json").status == 1);
  CHECK(run("resultant -", "{").status == 1);
  CHECK(run("resultant -", R"({"degrees": [1], "polys": [[{"e": [2]}]]})").status == 1);
  CHECK(run("resultant - --max-symbolic-size 4", R"({"degrees": [2, 2, 2]})").status == 1);
  CHECK(run("verify 4").status == 0);
  CHECK(run("verify 8").status == 3);
}
