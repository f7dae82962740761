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

#pragma once

// State and report files.
//
// A state file is one JSON document:
//
//   {
//     "format": "sepcheck-state", "version": 1,
//     "dims": [2, 2, 2],
//     "index_base": 1,
//     "matrix": [[[re, im], ...], ...],   // matrix[r][c] holds rho_{r+1,c+1}
//     "metadata": {"label": "...", "generator": "...", "seed": 42}
//   }
//
// Doubles are written in shortest round-trip form, so a read reproduces every
// entry bit for bit. Magnitudes below 1e-300 are written as 0.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sepcheck/criteria.hpp"
#include "sepcheck/density_matrix.hpp"
#include "sepcheck/oracle.hpp"

namespace sepcheck {

struct StateMetadata {
  std::string label;
  std::string generator;
  std::optional<std::uint64_t> seed;
};

struct StateFile {
  DensityMatrix rho;
  StateMetadata metadata;
};

nlohmann::json state_to_json(const DensityMatrix& rho, const StateMetadata& metadata = {});
/// Throws Parse on schema errors; validation errors propagate from DensityMatrix::build.
StateFile state_from_json(const nlohmann::json& doc, const ValidationConfig& cfg = {});

/// Throws Io when the path cannot be written.
void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho, const StateMetadata& metadata = {});
/// Throws Io when the path cannot be read, Parse when it is not a state file.
StateFile read_state_file(const std::filesystem::path& path, const ValidationConfig& cfg = {});

struct SkippedCriterion {
  CriterionId id = CriterionId::BisepQubit;
  std::string reason;
};

struct CheckReport {
  std::string input;
  std::vector<int> dims;
  std::string label;
  std::vector<CriterionReport> reports;
  std::vector<SkippedCriterion> skipped;
  Implication overall = Implication::Inconclusive;
};

/// Genuine entanglement if any t1/t2/t3 is violated; otherwise not fully
/// separable if any t4a/t4b/t6/t5 is violated; otherwise fully separable if
/// t5 says so; otherwise inconclusive.
Implication overall_classification(std::span<const CriterionReport> reports);

nlohmann::json report_to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& doc);
std::string report_to_text(const CheckReport& report);

nlohmann::json summary_to_json(const OracleSummary& summary, const OracleRunSpec& spec);
std::string summary_to_text(const OracleSummary& summary, const OracleRunSpec& spec);

/// printf("%.17g"), which strtod reads back exactly.
std::string format_double(double v);

}  // namespace sepcheck
