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

#include "sepcheck/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "sepcheck/error.hpp"

namespace sepcheck {

namespace {

// Populations within validation tolerance of zero may be slightly negative.
double population(const DensityMatrix& rho, std::size_t i) { return std::max(0.0, rho.diagonal(i)); }

CriterionReport finish(CriterionId id, double lhs, double rhs, double tol) {
  CriterionReport r;
  r.id = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.tolerance = tol;
  r.verdict = r.margin > tol ? Verdict::Violated : Verdict::Satisfied;
  if (r.verdict == Verdict::Satisfied) {
    r.implication = id == CriterionId::GhzNoiseExact ? Implication::FullySeparable : Implication::Inconclusive;
  } else if (certifies_genuine_entanglement(id)) {
    r.implication = Implication::GenuineMultipartiteEntangled;
  } else {
    r.implication = Implication::NotFullySeparable;
  }
  return r;
}

void check_tolerance(double tol) {
  if (!(tol >= 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be nonnegative");
}

void require_qubits(const DensityMatrix& rho, CriterionId id) {
  if (!rho.dims().all_qubits()) {
    throw Error(ErrorKind::UnsupportedDimension,
                std::string(short_id(id)) + " needs all-qubit dims, got (" + rho.dims().to_string() + ")");
  }
}

double corner_geometric_mean(const DensityMatrix& rho) {
  const auto corners = corner_indices(rho.dims());
  double log_sum = 0.0;
  for (std::size_t i : corners) {
    const double v = population(rho, i);
    if (v == 0.0) return 0.0;
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(corners.size()));
}

struct SingleExcitationSums {
  double coherence = 0.0;   // sum_{j<i} |rho_{r_i,r_j}|
  double cross = 0.0;       // sum_{j<i} sqrt(rho_{1,1} rho_{q_ij,q_ij})
  double populations = 0.0; // sum_i rho_{r_i,r_i}
};

SingleExcitationSums single_excitation_sums(const DensityMatrix& rho) {
  const int n = rho.dims().parties();
  const auto r = single_excitation_indices(n);
  const double ground = population(rho, 1);
  SingleExcitationSums s;
  for (int i = 1; i <= n; ++i) {
    const std::size_t ri = r[static_cast<std::size_t>(i - 1)];
    s.populations += population(rho, ri);
    for (int j = 1; j < i; ++j) {
      const std::size_t rj = r[static_cast<std::size_t>(j - 1)];
      s.coherence += std::abs(rho.entry(ri, rj));
      s.cross += std::sqrt(ground * population(rho, pair_excitation_index(i, j, n)));
    }
  }
  return s;
}

}  // namespace

std::string_view short_id(CriterionId id) noexcept {
  switch (id) {
    case CriterionId::BisepQubit: return "t1";
    case CriterionId::BisepQudit: return "t2";
    case CriterionId::WType: return "t3";
    case CriterionId::FullSepGhzType: return "t4a";
    case CriterionId::FullSepWType: return "t4b";
    case CriterionId::GhzNoiseExact: return "t5";
    case CriterionId::FullSepQudit: return "t6";
  }
  return "?";
}

std::string_view name(CriterionId id) noexcept {
  switch (id) {
    case CriterionId::BisepQubit: return "bisep_qubit";
    case CriterionId::BisepQudit: return "bisep_qudit";
    case CriterionId::WType: return "w_type";
    case CriterionId::FullSepGhzType: return "fullsep_ghz_type";
    case CriterionId::FullSepWType: return "fullsep_w_type";
    case CriterionId::GhzNoiseExact: return "ghz_noise_exact";
    case CriterionId::FullSepQudit: return "fullsep_qudit";
  }
  return "?";
}

std::optional<CriterionId> parse_criterion(std::string_view text) {
  for (CriterionId id : kAllCriteria) {
    if (text == short_id(id) || text == name(id)) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict v) noexcept { return v == Verdict::Violated ? "Violated" : "Satisfied"; }

std::string_view to_string(Implication i) noexcept {
  switch (i) {
    case Implication::Inconclusive: return "Inconclusive";
    case Implication::FullySeparable: return "FullySeparable";
    case Implication::NotFullySeparable: return "NotFullySeparable";
    case Implication::GenuineMultipartiteEntangled: return "GenuineMultipartiteEntangled";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::Satisfied, Verdict::Violated}) {
    if (text == to_string(v)) return v;
  }
  return std::nullopt;
}

std::optional<Implication> parse_implication(std::string_view text) {
  for (Implication i : {Implication::Inconclusive, Implication::FullySeparable, Implication::NotFullySeparable,
                        Implication::GenuineMultipartiteEntangled}) {
    if (text == to_string(i)) return i;
  }
  return std::nullopt;
}

bool certifies_genuine_entanglement(CriterionId id) noexcept {
  return id == CriterionId::BisepQubit || id == CriterionId::BisepQudit || id == CriterionId::WType;
}

bool certifies_non_full_separability(CriterionId id) noexcept {
  return id == CriterionId::FullSepGhzType || id == CriterionId::FullSepWType || id == CriterionId::FullSepQudit;
}

bool applicable(CriterionId id, const SubsystemDims& dims) noexcept {
  switch (id) {
    case CriterionId::BisepQudit:
    case CriterionId::FullSepQudit:
      return true;
    default:
      return dims.all_qubits();
  }
}

CriterionReport check_bisep(const DensityMatrix& rho, double tol) {
  check_tolerance(tol);
  const std::size_t dim = rho.size();
  const double lhs = std::abs(rho.entry(1, dim));
  double sum = 0.0;
  for (std::size_t i : corner_indices(rho.dims())) {
    sum += std::sqrt(population(rho, i) * population(rho, mirror_index(i, dim)));
  }
  const CriterionId id = rho.dims().all_qubits() ? CriterionId::BisepQubit : CriterionId::BisepQudit;
  return finish(id, lhs, 0.5 * sum, tol);
}

CriterionReport check_w_type(const DensityMatrix& rho, double tol) {
  check_tolerance(tol);
  require_qubits(rho, CriterionId::WType);
  const auto s = single_excitation_sums(rho);
  const double n = rho.dims().parties();
  return finish(CriterionId::WType, s.coherence, s.cross + 0.5 * (n - 2.0) * s.populations, tol);
}

CriterionReport check_fullsep_ghz_type(const DensityMatrix& rho, double tol) {
  check_tolerance(tol);
  const double lhs = std::abs(rho.entry(1, rho.size()));
  const CriterionId id = rho.dims().all_qubits() ? CriterionId::FullSepGhzType : CriterionId::FullSepQudit;
  return finish(id, lhs, corner_geometric_mean(rho), tol);
}

CriterionReport check_fullsep_w_type(const DensityMatrix& rho, double tol) {
  check_tolerance(tol);
  require_qubits(rho, CriterionId::FullSepWType);
  const auto s = single_excitation_sums(rho);
  return finish(CriterionId::FullSepWType, s.coherence, s.cross, tol);
}

CriterionReport evaluate(CriterionId id, const DensityMatrix& rho, double tol) {
  if (!applicable(id, rho.dims())) require_qubits(rho, id);
  switch (id) {
    case CriterionId::BisepQubit:
    case CriterionId::BisepQudit:
      return check_bisep(rho, tol);
    case CriterionId::WType:
      return check_w_type(rho, tol);
    case CriterionId::FullSepGhzType:
    case CriterionId::FullSepQudit:
      return check_fullsep_ghz_type(rho, tol);
    case CriterionId::FullSepWType:
      return check_fullsep_w_type(rho, tol);
    case CriterionId::GhzNoiseExact:
      return check_ghz_noise_exact(rho, tol);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown criterion");
}

double ghz_noise_threshold(int n) {
  if (n < 2 || n > 62) throw Error(ErrorKind::InvalidDims, "qubit count out of range");
  return 1.0 - 1.0 / (std::ldexp(1.0, n - 1) + 1.0);
}

NoiseClassification classify_ghz_noise(const NoiseFamilyParams& params, double tol) {
  validate(params);
  NoiseClassification out;
  out.threshold = ghz_noise_threshold(params.n);
  out.verdict = params.p >= out.threshold ? NoiseClass::FullySeparable : NoiseClass::Entangled;
  out.bound = check_fullsep_ghz_type(ghz_white_noise(params), tol);
  const bool bound_says_separable = out.bound.verdict == Verdict::Satisfied;
  out.consistent = (bound_says_separable == (out.verdict == NoiseClass::FullySeparable)) ||
                   std::abs(out.bound.margin) <= tol;
  return out;
}

std::optional<NoiseFamilyParams> match_ghz_noise(const DensityMatrix& rho, double match_tol) {
  if (!rho.dims().all_qubits()) return std::nullopt;
  const std::size_t dim = rho.size();
  const double dimf = static_cast<double>(dim);
  double p = rho.diagonal(2) * dimf;
  if (p < -match_tol * dimf || p > 1.0 + match_tol * dimf) return std::nullopt;
  p = std::clamp(p, 0.0, 1.0);
  const double noise = p / dimf;
  const double coherence = (1.0 - p) / 2.0;
  const auto data = rho.data();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      double expected = 0.0;
      if (r == c) expected = noise;
      if ((r == 0 || r == dim - 1) && (c == 0 || c == dim - 1)) expected += coherence;
      if (std::abs(data[r * dim + c] - Complex(expected, 0.0)) > match_tol) return std::nullopt;
    }
  }
  return NoiseFamilyParams{rho.dims().parties(), p};
}

CriterionReport check_ghz_noise_exact(const DensityMatrix& rho, double tol) {
  check_tolerance(tol);
  if (!match_ghz_noise(rho)) {
    throw Error(ErrorKind::InvalidArgument, "state is not a GHZ white-noise mixture");
  }
  const double lhs = std::abs(rho.entry(1, rho.size()));
  return finish(CriterionId::GhzNoiseExact, lhs, corner_geometric_mean(rho), tol);
}

double noise_family_margin(CriterionId id, int n, double p) {
  const DensityMatrix rho = ghz_white_noise({n, p});
  const CriterionId effective = id == CriterionId::GhzNoiseExact ? CriterionId::FullSepGhzType : id;
  return evaluate(effective, rho, 0.0).margin;
}

double critical_noise(CriterionId id, int n, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "bisection tolerance must be positive");
  if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) throw Error(ErrorKind::InvalidArgument, "need 0 <= lo < hi <= 1");
  double f_lo = noise_family_margin(id, n, lo);
  const double f_hi = noise_family_margin(id, n, hi);
  if (!((f_lo > 0.0 && f_hi < 0.0) || (f_lo < 0.0 && f_hi > 0.0))) {
    throw Error(ErrorKind::Bracket, std::string(short_id(id)) + " margin does not change sign on [lo, hi]");
  }
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = noise_family_margin(id, n, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace sepcheck
