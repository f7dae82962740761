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

// Mixed-radix index algebra over the computational product basis.
//
// Party labels and linear matrix indices are 1-based in every public
// function here; digits of a MultiIndex are 0-based levels. Party 1 is the
// most significant digit, so for dims (d_1, ..., d_n) the multi-index
// (i_1, ..., i_n) maps to
//
//     i = i_1 * d_2 * ... * d_n + ... + i_{n-1} * d_n + i_n + 1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sepcheck {

/// Per-party level counts (d_1, ..., d_n) with n >= 2 and every d_l >= 2.
class SubsystemDims {
 public:
  explicit SubsystemDims(std::vector<int> levels);

  static SubsystemDims qubits(int n);
  static SubsystemDims uniform(int n, int d);

  int parties() const noexcept { return static_cast<int>(levels_.size()); }
  /// Levels of party `party` (1-based).
  int level(int party) const;
  std::span<const int> levels() const noexcept { return levels_; }
  /// D = d_1 * ... * d_n.
  std::size_t total() const noexcept { return total_; }
  /// Product of the levels of the parties after `party` (1-based); 1 for the last party.
  std::size_t stride(int party) const;
  bool all_qubits() const noexcept;

  std::string to_string() const;

  friend bool operator==(const SubsystemDims&, const SubsystemDims&) = default;

 private:
  std::vector<int> levels_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// Digit vector (i_1, ..., i_n), each 0 <= i_k <= d_k - 1.
struct MultiIndex {
  std::vector<int> digits;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Unordered split of the parties {1..n} into two nonempty groups.
class Bipartition {
 public:
  /// `left` holds 1-based party labels; the right side is the complement.
  Bipartition(std::vector<int> left, int parties);

  /// Parses "1|2,3" or "1,3|2". Both sides must be listed and be complementary.
  static Bipartition parse(const std::string& text, int parties);

  /// Every unordered split, canonicalized with party 1 on the left; 2^(n-1) - 1 of them.
  static std::vector<Bipartition> all(int parties);
  /// The k-th split of all(parties), 0 <= k < 2^(n-1) - 1, without materializing the list.
  static Bipartition nth(int parties, std::uint64_t k);

  int parties() const noexcept { return parties_; }
  std::vector<int> left() const;
  std::vector<int> right() const;
  bool on_left(int party) const;

  std::string to_string() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  struct FromMask {};
  Bipartition(FromMask, std::uint32_t left_mask, int parties);

  std::uint32_t left_mask_ = 0;
  int parties_ = 0;
};

void validate(const MultiIndex& m, const SubsystemDims& dims);

/// 1-based linear index of `m`.
std::size_t linear_index(const MultiIndex& m, const SubsystemDims& dims);
/// Inverse of linear_index.
MultiIndex multi_index(std::size_t linear, const SubsystemDims& dims);

/// D - i + 1: the index of the digit-wise complement (i_k -> d_k - 1 - i_k).
std::size_t mirror_index(std::size_t i, std::size_t total);

/// Linear indices whose digits are all 0 or d_k - 1, except the all-zero and
/// all-maximal ones. Sorted ascending; always 2^n - 2 entries.
std::vector<std::size_t> corner_indices(const SubsystemDims& dims);

/// [2^(n-i) + 1 for i = 1..n]: basis states with exactly qubit i excited.
std::vector<std::size_t> single_excitation_indices(int n);

/// 2^(n-i) + 2^(n-j) + 1 for 1 <= j < i <= n: qubits i and j excited.
std::size_t pair_excitation_index(int i, int j, int n);

}  // namespace sepcheck
