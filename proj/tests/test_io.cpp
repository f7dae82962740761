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

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "sepcheck/error.hpp"
#include "sepcheck/io.hpp"

using namespace sepcheck;
using nlohmann::json;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sepcheck_test_io_" + name);
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("state file round trip is bit exact") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const SubsystemDims dims = rep % 2 ? SubsystemDims({3, 2}) : SubsystemDims::qubits(3);
    const auto rho = random_separable_mixture({dims, 1 + rep % 4, rng(), SamplingMode::fully_separable()});
    const auto path = temp_path("roundtrip.json");
    write_state_file(path, rho, {"sample", "test", 17});
    const auto back = read_state_file(path);
    REQUIRE(back.rho.dims() == dims);
    for (std::size_t k = 0; k < rho.data().size(); ++k) {
      CHECK(same_bits(rho.data()[k].real(), back.rho.data()[k].real()));
      CHECK(same_bits(rho.data()[k].imag(), back.rho.data()[k].imag()));
    }
    CHECK(back.metadata.label == "sample");
    CHECK(back.metadata.generator == "test");
    CHECK(back.metadata.seed == 17u);
    std::filesystem::remove(path);
  }
}

TEST_CASE("state json layout") {
  const auto doc = state_to_json(ghz(2), {"ghz", "", std::nullopt});
  CHECK(doc["dims"] == json::array({2, 2}));
  CHECK(doc["index_base"] == 1);
  CHECK(doc["matrix"].size() == 4);
  CHECK(doc["matrix"][0][3][0] == 0.5);
  CHECK(doc["matrix"][0][3][1] == 0.0);
  CHECK(doc["metadata"]["seed"].is_null());
}

TEST_CASE("tiny magnitudes serialize as zero") {
  std::vector<Complex> m(16);
  m[0] = 0.5;
  m[15] = 0.5;
  m[3] = Complex(1e-310, 0);
  m[12] = Complex(1e-310, 0);
  const auto rho = DensityMatrix::build(SubsystemDims::qubits(2), m);
  const auto doc = state_to_json(rho);
  CHECK(doc["matrix"][0][3][0].get<double>() == 0.0);
}

TEST_CASE("malformed state documents are rejected") {
  auto good = state_to_json(ghz(2));
  CHECK_NOTHROW(state_from_json(good));

  auto no_dims = good;
  no_dims.erase("dims");
  CHECK(kind_of([&] { state_from_json(no_dims); }) == ErrorKind::Parse);

  auto short_rows = good;
  short_rows["matrix"].erase(3);
  CHECK(kind_of([&] { state_from_json(short_rows); }) == ErrorKind::DimensionMismatch);

  auto bad_pair = good;
  bad_pair["matrix"][1][1] = json::array({0.0});
  CHECK(kind_of([&] { state_from_json(bad_pair); }) == ErrorKind::Parse);

  auto text_entry = good;
  text_entry["matrix"][1][1] = json::array({"x", 0.0});
  CHECK(kind_of([&] { state_from_json(text_entry); }) == ErrorKind::Parse);

  auto asym = good;
  asym["matrix"][0][1] = json::array({0.1, 0.0});
  CHECK(kind_of([&] { state_from_json(asym); }) == ErrorKind::HermiticityViolation);

  auto bad_dims = good;
  bad_dims["dims"] = json::array({2, 1});
  CHECK(kind_of([&] { state_from_json(bad_dims); }) == ErrorKind::InvalidDims);

  CHECK(kind_of([&] { state_from_json(json::array()); }) == ErrorKind::Parse);
}

TEST_CASE("file errors") {
  CHECK(kind_of([] { read_state_file("/nonexistent/dir/state.json"); }) == ErrorKind::Io);
  CHECK(kind_of([] { write_state_file("/nonexistent/dir/state.json", ghz(2)); }) == ErrorKind::Io);
  const auto path = temp_path("garbage.json");
  std::ofstream(path) << "{ not json";
  CHECK(kind_of([&] { read_state_file(path); }) == ErrorKind::Parse);
  std::filesystem::remove(path);
}

TEST_CASE("overall classification ranks implications") {
  CriterionReport gme;
  gme.id = CriterionId::WType;
  gme.verdict = Verdict::Violated;
  gme.implication = Implication::GenuineMultipartiteEntangled;
  CriterionReport nfs;
  nfs.id = CriterionId::FullSepWType;
  nfs.verdict = Verdict::Violated;
  nfs.implication = Implication::NotFullySeparable;
  CriterionReport fs;
  fs.id = CriterionId::GhzNoiseExact;
  fs.implication = Implication::FullySeparable;
  CriterionReport quiet;
  quiet.id = CriterionId::BisepQubit;

  CHECK(overall_classification(std::vector<CriterionReport>{quiet}) == Implication::Inconclusive);
  CHECK(overall_classification(std::vector<CriterionReport>{}) == Implication::Inconclusive);
  CHECK(overall_classification(std::vector<CriterionReport>{quiet, fs}) == Implication::FullySeparable);
  CHECK(overall_classification(std::vector<CriterionReport>{nfs, quiet}) == Implication::NotFullySeparable);
  CHECK(overall_classification(std::vector<CriterionReport>{nfs, gme}) == Implication::GenuineMultipartiteEntangled);
}

TEST_CASE("report json and text carry identical numbers") {
  CheckReport report;
  report.input = "state.json";
  report.dims = {2, 2, 2};
  report.reports.push_back(check_bisep(ghz_white_noise({3, 0.3})));
  report.reports.push_back(check_fullsep_ghz_type(ghz_white_noise({3, 0.3})));
  report.skipped.push_back({CriterionId::GhzNoiseExact, "n/a"});
  report.overall = overall_classification(report.reports);

  const auto back = report_from_json(json::parse(report_to_json(report).dump()));
  REQUIRE(back.reports.size() == 2);
  CHECK(back.overall == report.overall);
  CHECK(back.skipped.at(0).id == CriterionId::GhzNoiseExact);

  const std::string text = report_to_text(report);
  for (std::size_t k = 0; k < report.reports.size(); ++k) {
    const auto& r = report.reports[k];
    CHECK(same_bits(back.reports[k].lhs, r.lhs));
    CHECK(same_bits(back.reports[k].margin, r.margin));
    for (const char* key : {" lhs=", " rhs=", " margin="}) {
      // k-th occurrence of the key in the text
      std::size_t pos = 0;
      for (std::size_t seen = 0; seen <= k; ++seen) pos = text.find(key, pos) + 1;
      const double parsed = std::strtod(text.c_str() + pos - 1 + std::strlen(key), nullptr);
      const double expected = std::strcmp(key, " lhs=") == 0 ? r.lhs : std::strcmp(key, " rhs=") == 0 ? r.rhs : r.margin;
      CHECK(same_bits(parsed, expected));
    }
  }
}

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 1000; ++k) {
    const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    CHECK(same_bits(std::strtod(format_double(v).c_str(), nullptr), v));
  }
}
