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

#include "sepcheck/kernels.hpp"

#include <cstddef>
#include <stdexcept>

namespace sepcheck::kernels {

namespace {

// Below this many rows the thread team costs more than it saves.
constexpr std::ptrdiff_t kParallelRows = 128;

void check_shape(std::size_t dim, std::size_t out_size) {
  if (dim * dim != out_size) throw std::invalid_argument("outer product: output is not D x D");
}

}  // namespace

void accumulate_outer_product(double weight, std::span<const Complex> psi, std::span<Complex> out) {
  const std::size_t dim = psi.size();
  check_shape(dim, out.size());
  const auto rows = static_cast<std::ptrdiff_t>(dim);
  const Complex* in = psi.data();
  Complex* dst = out.data();
#pragma omp parallel for schedule(dynamic, 16) if (rows >= kParallelRows)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const Complex a = weight * in[r];
    dst[r * rows + r] += weight * std::norm(in[r]);
    for (std::ptrdiff_t c = r + 1; c < rows; ++c) {
      const Complex v = a * std::conj(in[c]);
      dst[r * rows + c] += v;
      dst[c * rows + r] += std::conj(v);
    }
  }
}

void accumulate_outer_product_serial(double weight, std::span<const Complex> psi, std::span<Complex> out) {
  const std::size_t dim = psi.size();
  check_shape(dim, out.size());
  for (std::size_t r = 0; r < dim; ++r) {
    const Complex a = weight * psi[r];
    out[r * dim + r] += weight * std::norm(psi[r]);
    for (std::size_t c = r + 1; c < dim; ++c) {
      const Complex v = a * std::conj(psi[c]);
      out[r * dim + c] += v;
      out[c * dim + r] += std::conj(v);
    }
  }
}

}  // namespace sepcheck::kernels
