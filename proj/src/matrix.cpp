// Copyright 2026 The qrelent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrelent/matrix.hpp"

#include <cmath>
#include <string>

#include "qrelent/errors.hpp"
#include "qrelent/kernels.hpp"

namespace qrelent {

double zero_eig_threshold(Index n, double norm_max, const Tolerances& tol) {
  return static_cast<double>(n) * norm_max * tol.eig_scale;
}

double max_abs_entry(const ComplexMatrix& m) {
  return std::sqrt(kernels::max_abs_sq(m.data(), static_cast<std::size_t>(m.size())));
}

namespace {

void check_finite_square(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw DomainError("matrix must be square with dimension >= 1, got " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw DomainError("matrix has a non-finite entry");
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, const Tolerances& tol) {
  check_finite_square(m);
  double defect = 0.0;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i <= j; ++i) {
      defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  const double scale = std::max(1.0, max_abs_entry(m));
  if (defect > tol.herm_rel * scale) {
    throw DomainError("hermiticity defect " + std::to_string(defect) +
                      " exceeds tolerance");
  }
  mat_ = 0.5 * (m + m.adjoint());
  defect_ = defect;
  norm_max_ = max_abs_entry(mat_);
}

HermitianMatrix HermitianMatrix::trusted(ComplexMatrix m) {
  HermitianMatrix out;
  out.norm_max_ = max_abs_entry(m);
  out.mat_ = std::move(m);
  out.defect_ = 0.0;
  return out;
}

PsdhMatrix::PsdhMatrix(HermitianMatrix m, const Tolerances& tol) : base_(std::move(m)) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(base_.matrix(),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("eigensolver failed during psdh validation");
  }
  min_eig_ = solver.eigenvalues().minCoeff();
  const double eps = zero_eig_threshold(base_.dim(), base_.norm_max(), tol);
  if (min_eig_ < -eps) {
    throw DomainError("matrix is not positive semi-definite: min eigenvalue " +
                      std::to_string(min_eig_));
  }
}

PsdhMatrix::PsdhMatrix(const ComplexMatrix& m, const Tolerances& tol)
    : PsdhMatrix(HermitianMatrix(m, tol), tol) {}

DensityMatrix::DensityMatrix(PsdhMatrix m, const Tolerances& tol) : base_(std::move(m)) {
  const double tr = base_.trace();
  if (std::abs(tr - 1.0) > tol.trace_abs) {
    throw DomainError("density matrix trace " + std::to_string(tr) + " is not 1");
  }
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, const Tolerances& tol)
    : DensityMatrix(PsdhMatrix(m, tol), tol) {}

}  // namespace qrelent
