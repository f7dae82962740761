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

#include "sepcheck/tensor_index.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sepcheck/error.hpp"

namespace sepcheck {

namespace {

// Keeps 2^n masks and D in 64-bit arithmetic.
constexpr int kMaxParties = 30;
constexpr std::size_t kMaxTotal = std::size_t{1} << 40;

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidPartition, "bad party label '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorKind::InvalidPartition, "bad party label '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

SubsystemDims::SubsystemDims(std::vector<int> levels) : levels_(std::move(levels)) {
  if (levels_.size() < 2) throw Error(ErrorKind::InvalidDims, "need at least two parties");
  if (levels_.size() > kMaxParties) throw Error(ErrorKind::InvalidDims, "too many parties");
  for (int d : levels_) {
    if (d < 2) throw Error(ErrorKind::InvalidDims, "every party needs at least two levels");
  }
  strides_.assign(levels_.size(), 1);
  for (std::size_t k = levels_.size(); k-- > 0;) {
    strides_[k] = total_;
    if (total_ > kMaxTotal / static_cast<std::size_t>(levels_[k])) {
      throw Error(ErrorKind::InvalidDims, "total dimension too large");
    }
    total_ *= static_cast<std::size_t>(levels_[k]);
  }
}

SubsystemDims SubsystemDims::qubits(int n) { return uniform(n, 2); }

SubsystemDims SubsystemDims::uniform(int n, int d) {
  if (n < 2) throw Error(ErrorKind::InvalidDims, "need at least two parties");
  if (n > kMaxParties) throw Error(ErrorKind::InvalidDims, "too many parties");
  return SubsystemDims(std::vector<int>(static_cast<std::size_t>(n), d));
}

int SubsystemDims::level(int party) const {
  if (party < 1 || party > parties()) throw Error(ErrorKind::InvalidIndex, "party label out of range");
  return levels_[static_cast<std::size_t>(party - 1)];
}

std::size_t SubsystemDims::stride(int party) const {
  if (party < 1 || party > parties()) throw Error(ErrorKind::InvalidIndex, "party label out of range");
  return strides_[static_cast<std::size_t>(party - 1)];
}

bool SubsystemDims::all_qubits() const noexcept {
  return std::all_of(levels_.begin(), levels_.end(), [](int d) { return d == 2; });
}

std::string SubsystemDims::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(levels_[k]);
  }
  return out;
}

Bipartition::Bipartition(FromMask, std::uint32_t left_mask, int parties) : left_mask_(left_mask), parties_(parties) {}

Bipartition::Bipartition(std::vector<int> left, int parties) : parties_(parties) {
  if (parties < 2 || parties > kMaxParties) throw Error(ErrorKind::InvalidPartition, "bad party count");
  for (int p : left) {
    if (p < 1 || p > parties) throw Error(ErrorKind::InvalidPartition, "party label out of range");
    const std::uint32_t bit = std::uint32_t{1} << (p - 1);
    if (left_mask_ & bit) throw Error(ErrorKind::InvalidPartition, "duplicate party label");
    left_mask_ |= bit;
  }
  const std::uint32_t full = (std::uint32_t{1} << parties) - 1;
  if (left_mask_ == 0 || left_mask_ == full) {
    throw Error(ErrorKind::InvalidPartition, "both sides of a bipartition must be nonempty");
  }
}

Bipartition Bipartition::parse(const std::string& text, int parties) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos) {
    throw Error(ErrorKind::InvalidPartition, "expected 'a,b|c,...' but got '" + text + "'");
  }
  const auto lhs = split_ints(text.substr(0, bar));
  const auto rhs = split_ints(text.substr(bar + 1));
  Bipartition result(lhs, parties);
  std::vector<int> sorted_rhs = rhs;
  std::sort(sorted_rhs.begin(), sorted_rhs.end());
  if (sorted_rhs != result.right()) {
    throw Error(ErrorKind::InvalidPartition, "right side of '" + text + "' is not the complement of the left");
  }
  return result;
}

std::vector<Bipartition> Bipartition::all(int parties) {
  if (parties < 2 || parties > kMaxParties) throw Error(ErrorKind::InvalidPartition, "bad party count");
  const std::uint64_t count = (std::uint64_t{1} << (parties - 1)) - 1;
  std::vector<Bipartition> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(nth(parties, k));
  return out;
}

Bipartition Bipartition::nth(int parties, std::uint64_t k) {
  if (parties < 2 || parties > kMaxParties) throw Error(ErrorKind::InvalidPartition, "bad party count");
  const std::uint64_t count = (std::uint64_t{1} << (parties - 1)) - 1;
  if (k >= count) throw Error(ErrorKind::InvalidPartition, "bipartition rank out of range");
  // Party 1 always on the left; bits of k place parties 2..n.
  return Bipartition(FromMask{}, static_cast<std::uint32_t>(1u | (k << 1)), parties);
}

std::vector<int> Bipartition::left() const {
  std::vector<int> out;
  for (int p = 1; p <= parties_; ++p) {
    if (on_left(p)) out.push_back(p);
  }
  return out;
}

std::vector<int> Bipartition::right() const {
  std::vector<int> out;
  for (int p = 1; p <= parties_; ++p) {
    if (!on_left(p)) out.push_back(p);
  }
  return out;
}

bool Bipartition::on_left(int party) const {
  if (party < 1 || party > parties_) throw Error(ErrorKind::InvalidIndex, "party label out of range");
  return (left_mask_ >> (party - 1)) & 1u;
}

std::string Bipartition::to_string() const {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(v[k]);
    }
    return s;
  };
  return join(left()) + "|" + join(right());
}

void validate(const MultiIndex& m, const SubsystemDims& dims) {
  if (m.digits.size() != static_cast<std::size_t>(dims.parties())) {
    throw Error(ErrorKind::InvalidIndex, "multi-index length does not match party count");
  }
  for (std::size_t k = 0; k < m.digits.size(); ++k) {
    if (m.digits[k] < 0 || m.digits[k] >= dims.levels()[k]) {
      throw Error(ErrorKind::InvalidIndex, "digit " + std::to_string(k + 1) + " out of radix");
    }
  }
}

std::size_t linear_index(const MultiIndex& m, const SubsystemDims& dims) {
  validate(m, dims);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < m.digits.size(); ++k) {
    offset += static_cast<std::size_t>(m.digits[k]) * dims.stride(static_cast<int>(k) + 1);
  }
  return offset + 1;
}

MultiIndex multi_index(std::size_t linear, const SubsystemDims& dims) {
  if (linear < 1 || linear > dims.total()) throw Error(ErrorKind::InvalidIndex, "linear index out of range");
  std::size_t offset = linear - 1;
  MultiIndex m;
  m.digits.resize(static_cast<std::size_t>(dims.parties()));
  for (int p = 1; p <= dims.parties(); ++p) {
    const std::size_t s = dims.stride(p);
    m.digits[static_cast<std::size_t>(p - 1)] = static_cast<int>(offset / s);
    offset %= s;
  }
  return m;
}

std::size_t mirror_index(std::size_t i, std::size_t total) {
  if (i < 1 || i > total) throw Error(ErrorKind::InvalidIndex, "index out of range for mirror");
  return total - i + 1;
}

std::vector<std::size_t> corner_indices(const SubsystemDims& dims) {
  const int n = dims.parties();
  const std::uint64_t masks = std::uint64_t{1} << n;
  std::vector<std::size_t> out;
  out.reserve(masks - 2);
  for (std::uint64_t mask = 1; mask + 1 < masks; ++mask) {
    std::size_t offset = 0;
    for (int p = 1; p <= n; ++p) {
      // Bit n-p of the mask selects d_p - 1 for party p.
      if ((mask >> (n - p)) & 1u) {
        offset += static_cast<std::size_t>(dims.level(p) - 1) * dims.stride(p);
      }
    }
    out.push_back(offset + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> single_excitation_indices(int n) {
  if (n < 2 || n > kMaxParties) throw Error(ErrorKind::InvalidDims, "qubit count out of range");
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back((std::size_t{1} << (n - i)) + 1);
  return out;
}

std::size_t pair_excitation_index(int i, int j, int n) {
  if (n < 2 || n > kMaxParties) throw Error(ErrorKind::InvalidDims, "qubit count out of range");
  if (i == j) throw Error(ErrorKind::InvalidPair, "pair needs two distinct qubits");
  if (j < 1 || i > n || j > i) throw Error(ErrorKind::InvalidPair, "expected 1 <= j < i <= n");
  return (std::size_t{1} << (n - i)) + (std::size_t{1} << (n - j)) + 1;
}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDims: return "invalid-dims";
    case ErrorKind::InvalidIndex: return "invalid-index";
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::InvalidPartition: return "invalid-partition";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::HermiticityViolation: return "hermiticity-violation";
    case ErrorKind::TraceViolation: return "trace-violation";
    case ErrorKind::NegativeDiagonal: return "negative-diagonal";
    case ErrorKind::PsdViolation: return "psd-violation";
    case ErrorKind::NumericFailure: return "numeric-failure";
    case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
    case ErrorKind::Bracket: return "bracket";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace sepcheck
