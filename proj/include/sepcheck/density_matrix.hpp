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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sepcheck/tensor_index.hpp"

namespace sepcheck {

using Complex = std::complex<double>;

/// Largest matrix dimension accepted by DensityMatrix::build (12 qubits).
inline constexpr std::size_t kMaxDensityDim = 4096;

struct ValidationConfig {
  double hermiticity_tol = 1e-10;
  double trace_tol = 1e-10;
  double psd_tol = 1e-9;
  bool check_psd = false;
};

/// Immutable, validated density matrix in the computational product basis.
///
/// Entries are addressed with 1-based (i, j) as rho_{i,j}. Invalid input is
/// rejected, never repaired.
class DensityMatrix {
 public:
  /// `entries` is row-major D x D with D = dims.total().
  static DensityMatrix build(SubsystemDims dims, std::vector<Complex> entries, const ValidationConfig& cfg = {});

  const SubsystemDims& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return dims_.total(); }

  Complex entry(std::size_t i, std::size_t j) const;
  /// Real part of rho_{i,i}.
  double diagonal(std::size_t i) const;

  std::span<const Complex> data() const noexcept { return entries_; }
  bool psd_checked() const noexcept { return psd_checked_; }

  /// Smallest eigenvalue of the Hermitian matrix.
  double min_eigenvalue() const;

 private:
  DensityMatrix(SubsystemDims dims, std::vector<Complex> entries, bool psd_checked)
      : dims_(std::move(dims)), entries_(std::move(entries)), psd_checked_(psd_checked) {}

  SubsystemDims dims_;
  std::vector<Complex> entries_;
  bool psd_checked_ = false;
};

/// Smallest eigenvalue of a row-major Hermitian D x D matrix (lower triangle is read).
double min_hermitian_eigenvalue(std::span<const Complex> entries, std::size_t dim);

}  // namespace sepcheck
