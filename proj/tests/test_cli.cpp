// Copyright 2026 The sepcheck Authors
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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "sepcheck/cli.hpp"
#include "sepcheck/io.hpp"

using namespace sepcheck;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sepcheck_test_cli_" + name)).string();
}

Complex entry(const json& doc, int i, int j) {
  const auto& e = doc["matrix"][i - 1][j - 1];
  return {e[0].get<double>(), e[1].get<double>()};
}

json check_json(const std::string& path, const std::string& criteria = "all") {
  const auto r = run({"check", path, "--criteria", criteria, "--format", "json"});
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

const json* find_report(const json& doc, const std::string& id) {
  for (const auto& r : doc["reports"]) {
    if (r["id"] == id) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("gen writes named states") {
  auto r = run({"gen", "ghz", "--n", "3"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(entry(doc, 1, 8) == Complex(0.5, 0));
  CHECK(entry(doc, 8, 8) == Complex(0.5, 0));

  r = run({"gen", "ghz-noise", "--n", "3", "--p", "0.8"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(entry(doc, 2, 2).real() == doctest::Approx(0.1).epsilon(1e-15));

  r = run({"gen", "w", "--n", "2"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(entry(doc, 2, 3) == Complex(0.5, 0));
  CHECK(doc["metadata"]["label"] == "w");
}

TEST_CASE("gen random states are seeded") {
  const auto a = run({"gen", "random-separable", "--dims", "2,3", "--seed", "9", "--terms", "3"});
  const auto b = run({"gen", "random-separable", "--dims", "2,3", "--seed", "9", "--terms", "3"});
  const auto c = run({"gen", "random-separable", "--dims", "2,3", "--seed", "10", "--terms", "3"});
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["matrix"] == json::parse(b.out)["matrix"]);
  CHECK(json::parse(a.out)["matrix"] != json::parse(c.out)["matrix"]);
  CHECK(json::parse(a.out)["metadata"]["seed"] == 9);
}

TEST_CASE("check classifies example states") {
  const std::string path = temp_file("state.json");

  REQUIRE(run({"gen", "ghz", "--n", "3", "-o", path}).code == 0);
  auto doc = check_json(path);
  CHECK(doc["overall"] == "GenuineMultipartiteEntangled");
  const json* t1 = find_report(doc, "t1");
  REQUIRE(t1);
  CHECK((*t1)["lhs"] == 0.5);
  CHECK((*t1)["rhs"] == 0.0);
  CHECK((*t1)["verdict"] == "Violated");

  REQUIRE(run({"gen", "ghz-noise", "--n", "3", "--p", "1", "-o", path}).code == 0);
  doc = check_json(path, "t1,t2,t3,t4a,t4b,t6");
  CHECK(doc["overall"] == "Inconclusive");
  for (const auto& r : doc["reports"]) CHECK(r["verdict"] == "Satisfied");

  REQUIRE(run({"gen", "ghz-noise", "--n", "3", "--p", "0.79", "-o", path}).code == 0);
  doc = check_json(path);
  const json* t4a = find_report(doc, "t4a");
  REQUIRE(t4a);
  CHECK((*t4a)["verdict"] == "Violated");
  CHECK(doc["overall"] == "NotFullySeparable");

  REQUIRE(run({"gen", "ghz-noise", "--n", "3", "--p", "0.81", "-o", path}).code == 0);
  doc = check_json(path);
  CHECK(doc["overall"] == "FullySeparable");

  std::filesystem::remove(path);
}

TEST_CASE("check reports skipped criteria") {
  const std::string path = temp_file("qutrit.json");
  REQUIRE(run({"gen", "ghz-qudit", "--n", "2", "--d", "3", "-o", path}).code == 0);
  auto doc = check_json(path);
  std::vector<std::string> skipped;
  for (const auto& s : doc["skipped"]) skipped.push_back(s["id"]);
  CHECK(skipped == std::vector<std::string>{"t1", "t3", "t4a", "t4b", "t5"});
  CHECK(find_report(doc, "t2"));
  CHECK((*find_report(doc, "t2"))["lhs"].get<double>() == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK((*find_report(doc, "t6"))["rhs"] == 0.0);

  REQUIRE(run({"gen", "w", "--n", "3", "-o", path}).code == 0);
  doc = check_json(path, "t1,t2,t5");
  REQUIRE(doc["reports"].size() == 1);
  CHECK(doc["reports"][0]["id"] == "t1");
  skipped.clear();
  for (const auto& s : doc["skipped"]) skipped.push_back(s["id"]);
  CHECK(skipped == std::vector<std::string>{"t2", "t5"});
  std::filesystem::remove(path);
}

TEST_CASE("check text output") {
  const std::string path = temp_file("text.json");
  REQUIRE(run({"gen", "w", "--n", "3", "-o", path}).code == 0);
  const auto r = run({"check", path, "--criteria", "t3", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("t3 w_type lhs=1 rhs=0.5 margin=0.5 Violated") != std::string::npos);
  CHECK(r.out.find("overall: GenuineMultipartiteEntangled") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("threshold output") {
  auto r = run({"threshold", "--criterion", "t4a", "--n", "3", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("closed_form: 0.8") != std::string::npos);

  r = run({"threshold", "--criterion", "t1", "--n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["p_critical"].get<double>() == doctest::Approx(4.0 / 7).epsilon(1e-9));
  CHECK(std::abs(doc["difference"].get<double>()) <= 1e-9);

  r = run({"threshold", "--criterion", "t1", "--n", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["p_critical"].get<double>() == doctest::Approx(2.0 / 3).epsilon(1e-9));

  r = run({"threshold", "--criterion", "t3", "--n", "3"});
  CHECK(r.code == cli::kBracketFailure);
  r = run({"threshold", "--criterion", "t1", "--n", "3", "--lo", "0.7"});
  CHECK(r.code == cli::kBracketFailure);
}

TEST_CASE("oracle subcommand") {
  auto r = run({"oracle", "--dims", "2,2,2", "--samples", "200", "--mode", "bisep-fixed,bisep-mixed", "--format",
                "json"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["sound"] == true);
  CHECK(doc["samples"] == 400);
  std::vector<std::string> ids;
  for (const auto& c : doc["criteria"]) ids.push_back(c["id"]);
  CHECK(ids == std::vector<std::string>{"t1", "t3"});

  r = run({"oracle", "--dims", "3,3", "--samples", "100"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("result: sound") != std::string::npos);

  r = run({"oracle", "--dims", "2,2,2", "--mode", "bisep-mixed", "--criteria", "t4a"});
  CHECK(r.code == cli::kInputError);
}

TEST_CASE("format environment variable") {
  ::setenv(cli::kFormatEnv, "json", 1);
  auto r = run({"threshold", "--criterion", "t4a", "--n", "3"});
  ::unsetenv(cli::kFormatEnv);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["closed_form"].get<double>() == doctest::Approx(0.8));

  r = run({"threshold", "--criterion", "t4a", "--n", "3"});
  CHECK(r.out.rfind("criterion: t4a", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"gen"}).code == cli::kInputError);
  CHECK(run({"gen", "ghz"}).code == cli::kInputError);
  CHECK(run({"gen", "ghz-noise", "--n", "3", "--p", "1.5"}).code == cli::kInputError);
  CHECK(run({"gen", "blah", "--n", "3"}).code == cli::kInputError);
  CHECK(run({"check", "/nonexistent/state.json"}).code == cli::kIoError);
  CHECK(run({"gen", "ghz", "--n", "2", "-o", "/nonexistent/dir/x.json"}).code == cli::kIoError);
  CHECK(run({"threshold", "--criterion", "t9", "--n", "3"}).code == cli::kInputError);
  CHECK(run({"check", "x.json", "--format", "xml"}).code == cli::kInputError);

  const std::string path = temp_file("bad.json");
  REQUIRE(run({"gen", "ghz", "--n", "2", "-o", path}).code == 0);
  CHECK(run({"check", path, "--criteria", "t1,t7"}).code == cli::kInputError);
  CHECK(run({"check", path, "--tol", "-1"}).code == cli::kInputError);
  std::filesystem::remove(path);
}
