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

// Named states and seeded samplers of separable and biseparable states.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sepcheck/density_matrix.hpp"
#include "sepcheck/tensor_index.hpp"

namespace sepcheck {

/// rho(p) = (1 - p) |GHZ_n><GHZ_n| + p I / 2^n.
struct NoiseFamilyParams {
  int n = 3;
  double p = 0.0;
};

enum class SamplingKind { FullySeparable, BiseparableFixed, BiseparableMixed };

struct SamplingMode {
  SamplingKind kind = SamplingKind::FullySeparable;
  /// Set only for BiseparableFixed.
  std::optional<Bipartition> partition;

  static SamplingMode fully_separable() { return {SamplingKind::FullySeparable, std::nullopt}; }
  static SamplingMode biseparable_fixed(Bipartition split) { return {SamplingKind::BiseparableFixed, std::move(split)}; }
  static SamplingMode biseparable_mixed() { return {SamplingKind::BiseparableMixed, std::nullopt}; }

  /// "full-sep", "bisep-fixed(1|2,3)", "bisep-mixed".
  std::string name() const;

  friend bool operator==(const SamplingMode&, const SamplingMode&) = default;
};

struct SeparableSampleSpec {
  SubsystemDims dims;
  int num_terms = 1;
  std::uint64_t seed = 0;
  SamplingMode mode;
};

DensityMatrix ghz(int n);
DensityMatrix ghz_white_noise(const NoiseFamilyParams& params);
DensityMatrix w_state(int n);
DensityMatrix ghz_qudit(int n, int d);

/// Projector onto a product of independent Haar-random single-party states.
DensityMatrix random_pure_product(const SubsystemDims& dims, std::uint64_t seed);

/// Convex mixture of `num_terms` product pure states with uniform simplex weights.
DensityMatrix random_separable_mixture(const SeparableSampleSpec& spec);

/// Normalized vector of i.i.d. standard complex Gaussian amplitudes.
std::vector<Complex> haar_random_vector(std::size_t dim, std::mt19937_64& engine);

/// State vector of a product over `blocks` (1-based party labels, disjoint,
/// covering every party), each block factor Haar-random.
std::vector<Complex> random_block_product_vector(const SubsystemDims& dims, const std::vector<std::vector<int>>& blocks,
                                                 std::mt19937_64& engine);

/// Pure product state vector across `split`: one Haar factor per side.
std::vector<Complex> random_biseparable_vector(const SubsystemDims& dims, const Bipartition& split,
                                               std::mt19937_64& engine);

/// Projector |psi><psi| (psi must be normalized).
DensityMatrix projector(const SubsystemDims& dims, const std::vector<Complex>& psi);

void validate(const NoiseFamilyParams& params);
void validate(const SeparableSampleSpec& spec);

}  // namespace sepcheck
