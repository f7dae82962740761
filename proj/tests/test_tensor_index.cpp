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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "sepcheck/error.hpp"
#include "sepcheck/tensor_index.hpp"

using namespace sepcheck;

namespace {

// Lexicographic odometer over digit vectors, last digit fastest. Position in
// this sequence (plus one) is the reference linear index.
bool next_digits(std::vector<int>& digits, std::span<const int> levels) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < levels[k]) return true;
    digits[k] = 0;
  }
  return false;
}

std::vector<MultiIndex> enumerate(const SubsystemDims& dims) {
  std::vector<MultiIndex> out;
  std::vector<int> digits(static_cast<std::size_t>(dims.parties()), 0);
  do {
    out.push_back({digits});
  } while (next_digits(digits, dims.levels()));
  return out;
}

std::vector<std::size_t> corners_by_enumeration(const SubsystemDims& dims) {
  std::vector<std::size_t> out;
  const auto all = enumerate(dims);
  for (std::size_t pos = 0; pos < all.size(); ++pos) {
    const auto& d = all[pos].digits;
    bool extreme = true;
    for (std::size_t k = 0; k < d.size(); ++k) extreme = extreme && (d[k] == 0 || d[k] == dims.levels()[k] - 1);
    const bool low = std::all_of(d.begin(), d.end(), [](int v) { return v == 0; });
    bool high = true;
    for (std::size_t k = 0; k < d.size(); ++k) high = high && d[k] == dims.levels()[k] - 1;
    if (extreme && !low && !high) out.push_back(pos + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("subsystem dims validate and multiply") {
  const SubsystemDims dims({2, 3, 4});
  CHECK(dims.parties() == 3);
  CHECK(dims.total() == 24);
  CHECK(dims.stride(1) == 12);
  CHECK(dims.stride(3) == 1);
  CHECK_FALSE(dims.all_qubits());
  CHECK(SubsystemDims::qubits(4).all_qubits());
  CHECK_THROWS_AS(SubsystemDims({2}), Error);
  CHECK_THROWS_AS(SubsystemDims({2, 1}), Error);
  CHECK_THROWS_AS(SubsystemDims::qubits(1), Error);
}

TEST_CASE("linear_index examples") {
  CHECK(linear_index({{0, 0, 0}}, SubsystemDims::qubits(3)) == 1);
  CHECK(linear_index({{1, 1, 1}}, SubsystemDims::qubits(3)) == 8);
  const SubsystemDims qutrits = SubsystemDims::uniform(3, 3);
  // Reference: position of (2,1,0) in the lexicographic enumeration.
  const auto all = enumerate(qutrits);
  const auto it = std::find(all.begin(), all.end(), MultiIndex{{2, 1, 0}});
  REQUIRE(it != all.end());
  const auto expected = static_cast<std::size_t>(it - all.begin()) + 1;
  CHECK(expected == 22);
  CHECK(linear_index({{2, 1, 0}}, qutrits) == expected);
}

TEST_CASE("linear_index rejects bad digits") {
  const SubsystemDims dims({2, 3});
  CHECK_THROWS_AS(linear_index({{0, 3}}, dims), Error);
  CHECK_THROWS_AS(linear_index({{-1, 0}}, dims), Error);
  CHECK_THROWS_AS(linear_index({{0, 0, 0}}, dims), Error);
  try {
    linear_index({{2, 0}}, dims);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidIndex);
  }
}

TEST_CASE("linear_index is the lexicographic bijection") {
  const std::vector<std::vector<int>> shapes{{2, 2}, {2, 3}, {3, 2}, {2, 2, 2, 2}, {3, 3, 3}, {4, 2, 3}, {5, 7}};
  for (const auto& levels : shapes) {
    const SubsystemDims dims(levels);
    const auto all = enumerate(dims);
    REQUIRE(all.size() == dims.total());
    for (std::size_t pos = 0; pos < all.size(); ++pos) {
      CHECK(linear_index(all[pos], dims) == pos + 1);
      CHECK(multi_index(pos + 1, dims) == all[pos]);
    }
  }
}

TEST_CASE("mirror_index") {
  CHECK(mirror_index(2, 8) == 7);
  CHECK(mirror_index(1, 8) == 8);
  CHECK(mirror_index(14, 27) == 14);
  CHECK_THROWS_AS(mirror_index(0, 8), Error);
  CHECK_THROWS_AS(mirror_index(9, 8), Error);
  for (std::size_t i = 1; i <= 27; ++i) CHECK(mirror_index(mirror_index(i, 27), 27) == i);
}

TEST_CASE("mirror_index complements every digit") {
  for (const auto& levels : std::vector<std::vector<int>>{{2, 2, 2}, {3, 2}, {2, 3, 4}, {3, 3, 3}}) {
    const SubsystemDims dims(levels);
    for (const auto& m : enumerate(dims)) {
      MultiIndex c = m;
      for (std::size_t k = 0; k < c.digits.size(); ++k) c.digits[k] = levels[k] - 1 - c.digits[k];
      CHECK(mirror_index(linear_index(m, dims), dims.total()) == linear_index(c, dims));
    }
  }
}

TEST_CASE("corner_indices examples") {
  CHECK(corner_indices(SubsystemDims::qubits(3)) == std::vector<std::size_t>{2, 3, 4, 5, 6, 7});
  const SubsystemDims qutrits = SubsystemDims::uniform(3, 3);
  CHECK(corners_by_enumeration(qutrits) == std::vector<std::size_t>{3, 7, 9, 19, 21, 25});
  CHECK(corner_indices(qutrits) == std::vector<std::size_t>{3, 7, 9, 19, 21, 25});
  CHECK(corners_by_enumeration(SubsystemDims({2, 3})) == std::vector<std::size_t>{3, 4});
  CHECK(corner_indices(SubsystemDims({2, 3})) == std::vector<std::size_t>{3, 4});
}

TEST_CASE("corner_indices structure") {
  for (const auto& levels :
       std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 2, 4}, {3, 3, 3}, {2, 2, 2, 2, 2}, {4, 4}, {2, 5, 2, 3}}) {
    const SubsystemDims dims(levels);
    const auto a = corner_indices(dims);
    CHECK(a.size() == (std::size_t{1} << dims.parties()) - 2);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(a == corners_by_enumeration(dims));
    const std::set<std::size_t> set(a.begin(), a.end());
    for (std::size_t i : a) {
      const std::size_t m = mirror_index(i, dims.total());
      CHECK(set.count(m) == 1);
      CHECK(m != i);
    }
  }
  for (int n = 2; n <= 10; ++n) {
    const auto a = corner_indices(SubsystemDims::qubits(n));
    std::vector<std::size_t> expected;
    for (std::size_t i = 2; i < (std::size_t{1} << n); ++i) expected.push_back(i);
    CHECK(a == expected);
  }
}

TEST_CASE("single and pair excitation indices") {
  CHECK(single_excitation_indices(3) == std::vector<std::size_t>{5, 3, 2});
  CHECK(single_excitation_indices(2) == std::vector<std::size_t>{3, 2});
  CHECK(single_excitation_indices(4) == std::vector<std::size_t>{9, 5, 3, 2});
  CHECK(pair_excitation_index(2, 1, 3) == 7);
  CHECK(pair_excitation_index(3, 1, 3) == 6);
  CHECK(pair_excitation_index(2, 1, 2) == 4);
  CHECK_THROWS_AS(pair_excitation_index(2, 2, 3), Error);
  CHECK_THROWS_AS(pair_excitation_index(1, 2, 3), Error);
  CHECK_THROWS_AS(pair_excitation_index(4, 1, 3), Error);

  // Reference: weight-1 and weight-2 bitstrings through linear_index.
  for (int n = 2; n <= 6; ++n) {
    const SubsystemDims dims = SubsystemDims::qubits(n);
    const auto single = single_excitation_indices(n);
    for (int i = 1; i <= n; ++i) {
      MultiIndex m{std::vector<int>(static_cast<std::size_t>(n), 0)};
      m.digits[static_cast<std::size_t>(i - 1)] = 1;
      CHECK(single[static_cast<std::size_t>(i - 1)] == linear_index(m, dims));
      for (int j = 1; j < i; ++j) {
        MultiIndex mm = m;
        mm.digits[static_cast<std::size_t>(j - 1)] = 1;
        CHECK(pair_excitation_index(i, j, n) == linear_index(mm, dims));
      }
    }
  }
}

TEST_CASE("bipartitions") {
  const Bipartition b({1}, 3);
  CHECK(b.left() == std::vector<int>{1});
  CHECK(b.right() == std::vector<int>{2, 3});
  CHECK(b.to_string() == "1|2,3");
  CHECK(Bipartition::parse("1,3|2", 3).left() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(Bipartition({}, 3), Error);
  CHECK_THROWS_AS(Bipartition({1, 2, 3}, 3), Error);
  CHECK_THROWS_AS(Bipartition({4}, 3), Error);
  CHECK_THROWS_AS(Bipartition::parse("1|2", 3), Error);
  CHECK_THROWS_AS(Bipartition::parse("1,2,3", 3), Error);

  for (int n = 2; n <= 6; ++n) {
    const auto all = Bipartition::all(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)) - 1);
    // Distinct as unordered splits.
    std::set<std::vector<int>> seen;
    for (const auto& s : all) {
      auto l = s.left();
      auto r = s.right();
      CHECK(seen.insert(std::min(l, r)).second);
      CHECK(!l.empty());
      CHECK(!r.empty());
    }
  }
}
