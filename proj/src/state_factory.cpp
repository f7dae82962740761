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

#include "sepcheck/state_factory.hpp"

#include <algorithm>
#include <cmath>

#include "sepcheck/error.hpp"
#include "sepcheck/kernels.hpp"
#include "sepcheck/rng.hpp"

namespace sepcheck {

namespace {

// Streams of one mixture seed: term t uses kTermStream + t.
constexpr std::uint64_t kWeightStream = 0;
constexpr std::uint64_t kTermStream = 1;

void check_parties(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidDims, "need at least two parties, got " + std::to_string(n));
}

std::size_t dim_checked(const SubsystemDims& dims) {
  if (dims.total() > kMaxDensityDim) {
    throw Error(ErrorKind::DimensionMismatch, "dimension " + std::to_string(dims.total()) + " exceeds 4096");
  }
  return dims.total();
}

}  // namespace

std::string SamplingMode::name() const {
  switch (kind) {
    case SamplingKind::FullySeparable: return "full-sep";
    case SamplingKind::BiseparableFixed: return "bisep-fixed(" + (partition ? partition->to_string() : "?") + ")";
    case SamplingKind::BiseparableMixed: return "bisep-mixed";
  }
  return "?";
}

void validate(const NoiseFamilyParams& params) {
  check_parties(params.n);
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "noise weight p must lie in [0, 1]");
}

void validate(const SeparableSampleSpec& spec) {
  if (spec.num_terms < 1) throw Error(ErrorKind::InvalidArgument, "num_terms must be at least 1");
  if (spec.mode.kind == SamplingKind::BiseparableFixed) {
    if (!spec.mode.partition) throw Error(ErrorKind::InvalidPartition, "fixed biseparable mode needs a partition");
    if (spec.mode.partition->parties() != spec.dims.parties()) {
      throw Error(ErrorKind::InvalidPartition, "partition party count does not match dims");
    }
  }
}

DensityMatrix ghz(int n) { return ghz_qudit(n, 2); }

DensityMatrix ghz_white_noise(const NoiseFamilyParams& params) {
  validate(params);
  const SubsystemDims dims = SubsystemDims::qubits(params.n);
  const std::size_t dim = dim_checked(dims);
  const double noise = params.p / static_cast<double>(dim);
  const double coherence = (1.0 - params.p) / 2.0;
  std::vector<Complex> rho(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) rho[i * dim + i] = noise;
  rho[0] = coherence + noise;
  rho[dim * dim - 1] = coherence + noise;
  rho[dim - 1] = coherence;
  rho[(dim - 1) * dim] = coherence;
  return DensityMatrix::build(dims, std::move(rho));
}

DensityMatrix w_state(int n) {
  check_parties(n);
  const SubsystemDims dims = SubsystemDims::qubits(n);
  const std::size_t dim = dim_checked(dims);
  const double value = 1.0 / n;
  const auto support = single_excitation_indices(n);
  std::vector<Complex> rho(dim * dim);
  for (std::size_t r : support) {
    for (std::size_t c : support) rho[(r - 1) * dim + (c - 1)] = value;
  }
  return DensityMatrix::build(dims, std::move(rho));
}

DensityMatrix ghz_qudit(int n, int d) {
  check_parties(n);
  if (d < 2) throw Error(ErrorKind::InvalidDims, "need at least two levels, got " + std::to_string(d));
  const SubsystemDims dims = SubsystemDims::uniform(n, d);
  const std::size_t dim = dim_checked(dims);
  // |k k ... k> sits at offset k * (D - 1) / (d - 1).
  const std::size_t step = (dim - 1) / static_cast<std::size_t>(d - 1);
  const double value = 1.0 / d;
  std::vector<Complex> rho(dim * dim);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      rho[static_cast<std::size_t>(a) * step * dim + static_cast<std::size_t>(b) * step] = value;
    }
  }
  return DensityMatrix::build(dims, std::move(rho));
}

std::vector<Complex> haar_random_vector(std::size_t dim, std::mt19937_64& engine) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& a : v) {
      const double re = gauss(engine);
      const double im = gauss(engine);
      a = Complex(re, im);
      norm2 += re * re + im * im;
    }
  } while (norm2 == 0.0);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : v) a *= scale;
  return v;
}

std::vector<Complex> random_block_product_vector(const SubsystemDims& dims, const std::vector<std::vector<int>>& blocks,
                                                 std::mt19937_64& engine) {
  const int n = dims.parties();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::InvalidPartition, "empty block");
    for (int p : blocks[b]) {
      if (p < 1 || p > n || owner[static_cast<std::size_t>(p - 1)] != -1) {
        throw Error(ErrorKind::InvalidPartition, "blocks must be disjoint party labels in range");
      }
      owner[static_cast<std::size_t>(p - 1)] = static_cast<int>(b);
    }
  }
  for (int o : owner) {
    if (o < 0) throw Error(ErrorKind::InvalidPartition, "blocks must cover every party");
  }

  // Per block: Haar factor plus the stride each member party carries inside the block.
  std::vector<std::vector<Complex>> factors;
  std::vector<std::size_t> local_stride(static_cast<std::size_t>(n));
  for (const auto& block : blocks) {
    std::size_t block_dim = 1;
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
      local_stride[static_cast<std::size_t>(*it - 1)] = block_dim;
      block_dim *= static_cast<std::size_t>(dims.level(*it));
    }
    factors.push_back(haar_random_vector(block_dim, engine));
  }

  const std::size_t dim = dims.total();
  std::vector<Complex> psi(dim);
  std::vector<std::size_t> local(blocks.size());
  for (std::size_t offset = 0; offset < dim; ++offset) {
    std::fill(local.begin(), local.end(), 0);
    std::size_t rest = offset;
    for (int p = 1; p <= n; ++p) {
      const std::size_t digit = rest / dims.stride(p);
      rest %= dims.stride(p);
      const auto idx = static_cast<std::size_t>(p - 1);
      local[static_cast<std::size_t>(owner[idx])] += digit * local_stride[idx];
    }
    Complex amp(1.0, 0.0);
    for (std::size_t b = 0; b < blocks.size(); ++b) amp *= factors[b][local[b]];
    psi[offset] = amp;
  }
  return psi;
}

std::vector<Complex> random_biseparable_vector(const SubsystemDims& dims, const Bipartition& split,
                                               std::mt19937_64& engine) {
  if (split.parties() != dims.parties()) throw Error(ErrorKind::InvalidPartition, "partition does not match dims");
  return random_block_product_vector(dims, {split.left(), split.right()}, engine);
}

DensityMatrix projector(const SubsystemDims& dims, const std::vector<Complex>& psi) {
  const std::size_t dim = dim_checked(dims);
  if (psi.size() != dim) throw Error(ErrorKind::DimensionMismatch, "state vector length does not match dims");
  std::vector<Complex> rho(dim * dim);
  kernels::accumulate_outer_product(1.0, psi, rho);
  return DensityMatrix::build(dims, std::move(rho));
}

DensityMatrix random_pure_product(const SubsystemDims& dims, std::uint64_t seed) {
  SeparableSampleSpec spec{dims, 1, seed, SamplingMode::fully_separable()};
  return random_separable_mixture(spec);
}

DensityMatrix random_separable_mixture(const SeparableSampleSpec& spec) {
  validate(spec);
  const SubsystemDims& dims = spec.dims;
  const std::size_t dim = dim_checked(dims);
  const int n = dims.parties();
  const auto terms = static_cast<std::size_t>(spec.num_terms);

  // Uniform simplex weights from normalized exponential variates.
  std::vector<double> weights(terms);
  {
    auto engine = make_engine(spec.seed, kWeightStream);
    std::exponential_distribution<double> expo(1.0);
    double sum = 0.0;
    for (auto& w : weights) {
      do {
        w = expo(engine);
      } while (w == 0.0);
      sum += w;
    }
    for (auto& w : weights) w /= sum;
  }

  std::vector<std::vector<int>> singletons;
  for (int p = 1; p <= n; ++p) singletons.push_back({p});
  const std::uint64_t splits = (std::uint64_t{1} << (n - 1)) - 1;

  std::vector<Complex> rho(dim * dim);
  for (std::size_t t = 0; t < terms; ++t) {
    auto engine = make_engine(spec.seed, kTermStream + t);
    std::vector<Complex> psi;
    switch (spec.mode.kind) {
      case SamplingKind::FullySeparable:
        psi = random_block_product_vector(dims, singletons, engine);
        break;
      case SamplingKind::BiseparableFixed:
        psi = random_biseparable_vector(dims, *spec.mode.partition, engine);
        break;
      case SamplingKind::BiseparableMixed: {
        std::uniform_int_distribution<std::uint64_t> pick(0, splits - 1);
        psi = random_biseparable_vector(dims, Bipartition::nth(n, pick(engine)), engine);
        break;
      }
    }
    kernels::accumulate_outer_product(weights[t], psi, rho);
  }
  return DensityMatrix::build(dims, std::move(rho));
}

}  // namespace sepcheck
