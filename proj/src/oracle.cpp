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

#include "sepcheck/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "sepcheck/error.hpp"
#include "sepcheck/rng.hpp"

namespace sepcheck {

namespace {

struct Best {
  double margin = -INFINITY;
  std::size_t flat = 0;  // mode_index * samples + index
  std::size_t violations = 0;
};

// Larger margin wins, earlier sample on ties: order-free.
void merge(Best& into, const Best& other) {
  into.violations += other.violations;
  if (other.margin > into.margin || (other.margin == into.margin && other.flat < into.flat)) {
    into.margin = other.margin;
    into.flat = other.flat;
  }
}

void observe(Best& b, double margin, std::size_t flat, double tol) {
  if (margin > tol) ++b.violations;
  if (margin > b.margin || (margin == b.margin && flat < b.flat)) {
    b.margin = margin;
    b.flat = flat;
  }
}

void evaluate_sample(const OracleRunSpec& spec, std::size_t flat, std::vector<Best>& best) {
  const std::size_t mode_index = flat / spec.samples;
  const DensityMatrix rho = random_separable_mixture(sample_spec(spec, mode_index, flat % spec.samples));
  for (std::size_t c = 0; c < spec.criteria.size(); ++c) {
    observe(best[c], evaluate(spec.criteria[c], rho, spec.tol).margin, flat, spec.tol);
  }
}

OracleSummary summarize(const OracleRunSpec& spec, const std::vector<Best>& best) {
  OracleSummary out;
  out.samples = spec.samples * spec.modes.size();
  for (std::size_t c = 0; c < spec.criteria.size(); ++c) {
    CriterionSummary s;
    s.id = spec.criteria[c];
    s.max_margin = best[c].margin;
    s.violations = best[c].violations;
    s.samples = out.samples;
    const std::size_t mode_index = best[c].flat / spec.samples;
    const SeparableSampleSpec worst = sample_spec(spec, mode_index, best[c].flat % spec.samples);
    s.worst_seed = worst.seed;
    s.worst_terms = worst.num_terms;
    s.worst_mode = worst.mode;
    out.criteria.push_back(s);
  }
  return out;
}

double gap(double a, double b) { return std::abs(a - b); }

}  // namespace

std::size_t OracleSummary::violations() const noexcept {
  std::size_t total = 0;
  for (const auto& c : criteria) total += c.violations;
  return total;
}

void validate(const OracleRunSpec& spec) {
  if (spec.samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be at least 1");
  if (spec.max_terms < 1) throw Error(ErrorKind::InvalidArgument, "max_terms must be at least 1");
  if (!(spec.tol >= 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be nonnegative");
  if (spec.modes.empty()) throw Error(ErrorKind::InvalidArgument, "no sampling modes given");
  if (spec.criteria.empty()) throw Error(ErrorKind::InvalidArgument, "no criteria given");
  if (spec.dims.total() > kMaxDensityDim) throw Error(ErrorKind::DimensionMismatch, "dimension exceeds 4096");
  const bool all_full = std::all_of(spec.modes.begin(), spec.modes.end(),
                                    [](const SamplingMode& m) { return m.kind == SamplingKind::FullySeparable; });
  for (const auto& mode : spec.modes) {
    validate(SeparableSampleSpec{spec.dims, 1, 0, mode});
  }
  for (CriterionId id : spec.criteria) {
    if (id == CriterionId::GhzNoiseExact) {
      throw Error(ErrorKind::InvalidArgument, "t5 classifies a fixed family and has no sampling oracle");
    }
    if (!applicable(id, spec.dims)) {
      throw Error(ErrorKind::UnsupportedDimension,
                  std::string(short_id(id)) + " does not apply to dims (" + spec.dims.to_string() + ")");
    }
    if (certifies_non_full_separability(id) && !all_full) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string(short_id(id)) + " bounds fully separable states; sample with full-sep only");
    }
  }
}

SeparableSampleSpec sample_spec(const OracleRunSpec& spec, std::size_t mode_index, std::size_t index) {
  const std::uint64_t flat = static_cast<std::uint64_t>(mode_index) * spec.samples + index;
  const int terms = 1 + static_cast<int>(index % static_cast<std::size_t>(spec.max_terms));
  return SeparableSampleSpec{spec.dims, terms, derive_seed(spec.seed, flat), spec.modes.at(mode_index)};
}

OracleSummary run_soundness(const OracleRunSpec& spec) {
  validate(spec);
  const auto total = static_cast<std::ptrdiff_t>(spec.samples * spec.modes.size());
  std::vector<Best> best(spec.criteria.size());
  std::exception_ptr failure;
#pragma omp parallel
  {
    std::vector<Best> local(spec.criteria.size());
#pragma omp for schedule(dynamic, 64) nowait
    for (std::ptrdiff_t flat = 0; flat < total; ++flat) {
      try {
        evaluate_sample(spec, static_cast<std::size_t>(flat), local);
      } catch (...) {
#pragma omp critical(sepcheck_oracle_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(sepcheck_oracle_merge)
    for (std::size_t c = 0; c < best.size(); ++c) merge(best[c], local[c]);
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(spec, best);
}

OracleSummary run_soundness_serial(const OracleRunSpec& spec) {
  validate(spec);
  const std::size_t total = spec.samples * spec.modes.size();
  std::vector<Best> best(spec.criteria.size());
  for (std::size_t flat = 0; flat < total; ++flat) evaluate_sample(spec, flat, best);
  return summarize(spec, best);
}

std::vector<std::size_t> enumerate_corners_brute_force(const SubsystemDims& dims) {
  std::vector<std::size_t> out;
  const std::size_t dim = dims.total();
  for (std::size_t i = 1; i <= dim; ++i) {
    const MultiIndex m = multi_index(i, dims);
    bool extreme = true;
    bool all_low = true;
    bool all_high = true;
    for (std::size_t k = 0; k < m.digits.size(); ++k) {
      const int top = dims.levels()[k] - 1;
      extreme = extreme && (m.digits[k] == 0 || m.digits[k] == top);
      all_low = all_low && m.digits[k] == 0;
      all_high = all_high && m.digits[k] == top;
    }
    if (extreme && !all_low && !all_high) out.push_back(i);
  }
  return out;
}

double check_pure_biseparable_identity(const SubsystemDims& dims, const Bipartition& split, std::uint64_t seed) {
  if (split.parties() != dims.parties()) throw Error(ErrorKind::InvalidPartition, "partition does not match dims");
  const DensityMatrix rho =
      random_separable_mixture(SeparableSampleSpec{dims, 1, seed, SamplingMode::biseparable_fixed(split)});
  MultiIndex a;
  MultiIndex b;
  for (int p = 1; p <= dims.parties(); ++p) {
    const int top = dims.level(p) - 1;
    a.digits.push_back(split.on_left(p) ? top : 0);
    b.digits.push_back(split.on_left(p) ? 0 : top);
  }
  const std::size_t ia = linear_index(a, dims);
  const std::size_t ib = linear_index(b, dims);
  const double lhs = std::abs(rho.entry(1, dims.total()));
  return gap(lhs, std::sqrt(rho.diagonal(ia) * rho.diagonal(ib)));
}

double check_pure_product_equalities(const SubsystemDims& dims, std::uint64_t seed) {
  const DensityMatrix rho = random_pure_product(dims, seed);
  const auto corners = enumerate_corners_brute_force(dims);
  double product = 1.0;
  for (std::size_t i : corners) product *= rho.diagonal(i);
  const double geometric = std::pow(product, 1.0 / static_cast<double>(corners.size()));
  double deviation = gap(std::abs(rho.entry(1, dims.total())), geometric);

  if (dims.all_qubits()) {
    const int n = dims.parties();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const std::size_t r = (std::size_t{1} << i) + 1;
        const std::size_t s = (std::size_t{1} << j) + 1;
        const std::size_t q = (std::size_t{1} << i) + (std::size_t{1} << j) + 1;
        deviation = std::max(deviation, gap(std::abs(rho.entry(r, s)), std::sqrt(rho.diagonal(1) * rho.diagonal(q))));
      }
    }
  }
  return deviation;
}

}  // namespace sepcheck
