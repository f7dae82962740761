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

// Dense inner loops shared by the samplers and the oracle. Each parallel
// kernel has a serial twin with the same contract; tests hold the two to
// bitwise agreement and bench/ compares their speed.

#include <complex>
#include <span>

namespace sepcheck::kernels {

using Complex = std::complex<double>;

/// out[r*D + c] += weight * psi[r] * conj(psi[c]) over a D x D row-major block.
/// The upper triangle is computed and mirrored, so the update is exactly
/// Hermitian with a real diagonal.
void accumulate_outer_product(double weight, std::span<const Complex> psi, std::span<Complex> out);
void accumulate_outer_product_serial(double weight, std::span<const Complex> psi, std::span<Complex> out);

}  // namespace sepcheck::kernels
