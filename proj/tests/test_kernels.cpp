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

#include <omp.h>

#include "doctest.h"
#include "sepcheck/kernels.hpp"
#include "sepcheck/rng.hpp"
#include "sepcheck/state_factory.hpp"

using namespace sepcheck;

TEST_CASE("parallel outer product matches the serial kernel bit for bit") {
  for (std::size_t dim : {1u, 7u, 128u, 300u}) {
    auto engine = make_engine(99, dim);
    const auto psi = haar_random_vector(dim, engine);
    std::vector<Complex> par(dim * dim, Complex(0.25, -0.5));
    std::vector<Complex> ser = par;
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      std::vector<Complex> p = par;
      kernels::accumulate_outer_product(0.375, psi, p);
      std::vector<Complex> s = ser;
      kernels::accumulate_outer_product_serial(0.375, psi, s);
      CHECK(p == s);
    }
  }
}

TEST_CASE("outer product agrees with the naive formula and is exactly Hermitian") {
  const std::size_t dim = 9;
  auto engine = make_engine(5, 0);
  const auto psi = haar_random_vector(dim, engine);
  std::vector<Complex> out(dim * dim);
  kernels::accumulate_outer_product(0.5, psi, out);
  for (std::size_t r = 0; r < dim; ++r) {
    CHECK(out[r * dim + r].imag() == 0.0);
    for (std::size_t c = 0; c < dim; ++c) {
      CHECK(std::abs(out[r * dim + c] - 0.5 * psi[r] * std::conj(psi[c])) <= 1e-16);
      CHECK(out[r * dim + c] == std::conj(out[c * dim + r]));
    }
  }
}

TEST_CASE("outer product rejects mismatched shapes") {
  std::vector<Complex> psi(3);
  std::vector<Complex> out(8);
  CHECK_THROWS(kernels::accumulate_outer_product(1.0, psi, out));
  CHECK_THROWS(kernels::accumulate_outer_product_serial(1.0, psi, out));
}
