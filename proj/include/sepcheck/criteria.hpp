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

// Element-wise separability criteria.
//
// Every check compares an off-diagonal coherence (lhs) against a bound built
// from diagonal populations (rhs). Separable states of the matching class
// always satisfy lhs <= rhs, so a margin above the tolerance certifies
// entanglement; satisfaction alone proves nothing, except on the GHZ
// white-noise family where the full-separability bound is exact.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepcheck/density_matrix.hpp"
#include "sepcheck/state_factory.hpp"

namespace sepcheck {

inline constexpr double kDefaultTolerance = 1e-10;

enum class CriterionId {
  BisepQubit,       // t1: |rho_{1,D}| against mirrored corner populations, qubits
  BisepQudit,       // t2: same bound on arbitrary levels
  WType,            // t3: single-excitation coherences, biseparability, qubits
  FullSepGhzType,   // t4a: |rho_{1,D}| against the corner geometric mean, qubits
  FullSepWType,     // t4b: single-excitation coherences, full separability, qubits
  FullSepQudit,     // t6: corner geometric mean on arbitrary levels
  GhzNoiseExact,    // t5: exact classifier of the GHZ white-noise family
};

inline constexpr CriterionId kAllCriteria[] = {
    CriterionId::BisepQubit,     CriterionId::BisepQudit,   CriterionId::WType,         CriterionId::FullSepGhzType,
    CriterionId::FullSepWType,   CriterionId::FullSepQudit, CriterionId::GhzNoiseExact,
};

enum class Verdict { Satisfied, Violated };

enum class Implication { Inconclusive, FullySeparable, NotFullySeparable, GenuineMultipartiteEntangled };

/// Lowercase selector id: "t1", "t2", "t3", "t4a", "t4b", "t5", "t6".
std::string_view short_id(CriterionId id) noexcept;
/// Descriptive name, e.g. "bisep_qubit".
std::string_view name(CriterionId id) noexcept;
std::optional<CriterionId> parse_criterion(std::string_view text);

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Implication i) noexcept;
std::optional<Verdict> parse_verdict(std::string_view text);
std::optional<Implication> parse_implication(std::string_view text);

/// Bounds on genuine multipartite entanglement (t1, t2, t3).
bool certifies_genuine_entanglement(CriterionId id) noexcept;
/// Bounds on full separability (t4a, t4b, t6).
bool certifies_non_full_separability(CriterionId id) noexcept;
/// Whether `id` is defined for these dims (t1, t3, t4a, t4b, t5 need qubits).
bool applicable(CriterionId id, const SubsystemDims& dims) noexcept;

struct CriterionReport {
  CriterionId id = CriterionId::BisepQubit;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs
  Verdict verdict = Verdict::Satisfied;
  Implication implication = Implication::Inconclusive;
  double tolerance = kDefaultTolerance;
};

/// |rho_{1,D}| <= 1/2 sum_{i in A} sqrt(rho_{i,i} rho_{D-i+1,D-i+1}), A = corner_indices.
/// Reported as BisepQubit on all-qubit dims, BisepQudit otherwise.
CriterionReport check_bisep(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// sum_{j<i} |rho_{r_i,r_j}| <= sum_{j<i} sqrt(rho_{1,1} rho_{q_ij,q_ij}) + (n-2)/2 sum_i rho_{r_i,r_i}
/// with r = single_excitation_indices, q = pair_excitation_index. Qubits only.
CriterionReport check_w_type(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// |rho_{1,D}| <= (prod_{i in A} rho_{i,i})^(1/(2^n-2)).
/// Reported as FullSepGhzType on all-qubit dims, FullSepQudit otherwise.
CriterionReport check_fullsep_ghz_type(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// sum_{j<i} |rho_{r_i,r_j}| <= sum_{j<i} sqrt(rho_{1,1} rho_{q_ij,q_ij}). Qubits only.
CriterionReport check_fullsep_w_type(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// Runs criterion `id`. Qubit-only criteria throw UnsupportedDimension on
/// other dims; BisepQudit and FullSepQudit on qubit dims are relabeled to
/// their qubit ids. GhzNoiseExact throws InvalidArgument when `rho` is not a
/// member of the GHZ white-noise family.
CriterionReport evaluate(CriterionId id, const DensityMatrix& rho, double tol = kDefaultTolerance);

/// 1 - 1/(2^(n-1) + 1).
double ghz_noise_threshold(int n);

enum class NoiseClass { FullySeparable, Entangled };

struct NoiseClassification {
  NoiseClass verdict = NoiseClass::Entangled;
  double threshold = 0.0;
  /// check_fullsep_ghz_type on ghz_white_noise(params).
  CriterionReport bound;
  /// Whether `bound` agrees with `verdict` (inside the tolerance band around
  /// the threshold either reading is accepted).
  bool consistent = false;
};

NoiseClassification classify_ghz_noise(const NoiseFamilyParams& params, double tol = kDefaultTolerance);

/// Recovers p when `rho` equals ghz_white_noise(n, p) entry-wise within `match_tol`.
std::optional<NoiseFamilyParams> match_ghz_noise(const DensityMatrix& rho, double match_tol = 1e-9);

/// Exact full-separability verdict for a GHZ white-noise member.
CriterionReport check_ghz_noise_exact(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// Noise weight at which the margin of `id` on ghz_white_noise(n, p) crosses
/// zero, by bisection on [lo, hi] to an interval no wider than `tol`.
/// Throws Bracket if the margin does not change sign on [lo, hi].
double critical_noise(CriterionId id, int n, double lo = 0.0, double hi = 1.0, double tol = 1e-10);

/// Margin of `id` on ghz_white_noise(n, p); GhzNoiseExact uses FullSepGhzType.
double noise_family_margin(CriterionId id, int n, double p);

}  // namespace sepcheck
