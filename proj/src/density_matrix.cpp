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

#include "sepcheck/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "sepcheck/error.hpp"

namespace sepcheck {

namespace {

std::string at(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "rho_{" << i << "," << j << "}";
  return os.str();
}

}  // namespace

DensityMatrix DensityMatrix::build(SubsystemDims dims, std::vector<Complex> entries, const ValidationConfig& cfg) {
  if (cfg.hermiticity_tol < 0 || cfg.trace_tol < 0 || cfg.psd_tol < 0) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be nonnegative");
  }
  const std::size_t dim = dims.total();
  if (dim > kMaxDensityDim) {
    throw Error(ErrorKind::DimensionMismatch, "dimension " + std::to_string(dim) + " exceeds the supported maximum 4096");
  }
  if (entries.size() != dim * dim) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(dim * dim) + " entries for dims (" +
                                                  dims.to_string() + "), got " + std::to_string(entries.size()));
  }

  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r; c < dim; ++c) {
      const Complex a = entries[r * dim + c];
      const Complex b = entries[c * dim + r];
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
          !std::isfinite(b.imag())) {
        throw Error(ErrorKind::NumericFailure, "non-finite entry at " + at(r + 1, c + 1));
      }
      if (std::abs(a - std::conj(b)) > cfg.hermiticity_tol) {
        throw Error(ErrorKind::HermiticityViolation, at(r + 1, c + 1) + " is not the conjugate of " + at(c + 1, r + 1));
      }
    }
  }

  double trace = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double d = entries[i * dim + i].real();
    if (d < -cfg.psd_tol) throw Error(ErrorKind::NegativeDiagonal, at(i + 1, i + 1) + " is negative");
    trace += d;
  }
  if (std::abs(trace - 1.0) > cfg.trace_tol) {
    std::ostringstream os;
    os.precision(17);
    os << "trace is " << trace;
    throw Error(ErrorKind::TraceViolation, os.str());
  }

  if (cfg.check_psd) {
    const double lambda = min_hermitian_eigenvalue(entries, dim);
    if (lambda < -cfg.psd_tol) {
      std::ostringstream os;
      os << "smallest eigenvalue " << lambda;
      throw Error(ErrorKind::PsdViolation, os.str());
    }
  }
  return DensityMatrix(std::move(dims), std::move(entries), cfg.check_psd);
}

Complex DensityMatrix::entry(std::size_t i, std::size_t j) const {
  const std::size_t dim = size();
  if (i < 1 || j < 1 || i > dim || j > dim) throw Error(ErrorKind::InvalidIndex, at(i, j) + " out of range");
  return entries_[(i - 1) * dim + (j - 1)];
}

double DensityMatrix::diagonal(std::size_t i) const { return entry(i, i).real(); }

double DensityMatrix::min_eigenvalue() const { return min_hermitian_eigenvalue(entries_, size()); }

double min_hermitian_eigenvalue(std::span<const Complex> entries, std::size_t dim) {
  if (entries.size() != dim * dim) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> view(entries.data(), static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(view, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::NumericFailure, "Hermitian eigensolver did not converge");
  return solver.eigenvalues()(0);
}

}  // namespace sepcheck
