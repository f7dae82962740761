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

// Brute-force soundness and equality checks for the criteria.
//
// run_soundness draws separable states of the class a criterion bounds and
// counts violations; a sound criterion never yields one. The identity checks
// compare the pure-state equalities against quantities computed here from
// scratch (own index enumeration, direct products), not through criteria.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sepcheck/criteria.hpp"
#include "sepcheck/state_factory.hpp"

namespace sepcheck {

struct OracleRunSpec {
  SubsystemDims dims;
  /// Samples per mode.
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::vector<SamplingMode> modes{};
  std::vector<CriterionId> criteria{};
  double tol = kDefaultTolerance;
  /// Sample k mixes 1 + (k mod max_terms) pure terms.
  int max_terms = 4;
};

struct CriterionSummary {
  CriterionId id = CriterionId::BisepQubit;
  double max_margin = 0.0;
  std::size_t violations = 0;
  std::size_t samples = 0;
  /// Seed and mode reproducing the max-margin sample via random_separable_mixture.
  std::uint64_t worst_seed = 0;
  int worst_terms = 1;
  SamplingMode worst_mode;
};

struct OracleSummary {
  std::vector<CriterionSummary> criteria;
  std::size_t samples = 0;

  std::size_t violations() const noexcept;
  bool sound() const noexcept { return violations() == 0; }
};

/// Rejects criteria that do not bound the sampled class (full-separability
/// criteria need fully separable sampling) and dims they do not support.
void validate(const OracleRunSpec& spec);

/// Sample spec for sample `index` of mode `mode_index`.
SeparableSampleSpec sample_spec(const OracleRunSpec& spec, std::size_t mode_index, std::size_t index);

/// OpenMP over samples. Results are independent of thread count and schedule.
OracleSummary run_soundness(const OracleRunSpec& spec);
/// Single-threaded reference for run_soundness.
OracleSummary run_soundness_serial(const OracleRunSpec& spec);

/// Corner set of `dims` by decoding every linear index.
std::vector<std::size_t> enumerate_corners_brute_force(const SubsystemDims& dims);

/// | |rho_{1,D}| - sqrt(rho_{a,a} rho_{b,b}) | for a random pure state product
/// across `split`, where a has digits d_l - 1 on the left parties and 0 on the
/// right, and b is its complement.
double check_pure_biseparable_identity(const SubsystemDims& dims, const Bipartition& split, std::uint64_t seed);

/// Largest deviation, on a random pure product state, of
///   |rho_{1,D}| = (prod_{i in A} rho_{i,i})^(1/(2^n-2))
/// and, for qubit dims, of every pair identity
///   |rho_{2^i+1,2^j+1}| = sqrt(rho_{1,1} rho_{2^i+2^j+1,2^i+2^j+1}).
double check_pure_product_equalities(const SubsystemDims& dims, std::uint64_t seed);

}  // namespace sepcheck
