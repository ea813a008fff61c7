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

#ifndef QRELENT_MATRIX_HPP
#define QRELENT_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

namespace qrelent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Tolerance knobs shared across the library. Thresholds that depend on the
/// matrix at hand (dimension, max-abs entry) are derived from these factors.
struct Tolerances {
  double herm_rel = 1e-12;      // hermiticity defect vs max(1, max-abs entry)
  double trace_abs = 1e-12;     // |tr - 1| for density matrices
  double eig_scale = 0x1p-40;   // zero-eigenvalue clamp: n * max-abs * eig_scale
  double recon_rel = 1e-10;     // spectral reconstruction: rel * max-abs * n
  double support_rel = 1e-10;   // support containment: rel * max-abs(rho)
};

/// Threshold below which an eigenvalue of a matrix with the given dimension
/// and max-abs entry counts as zero. Scales with the eigensolver's backward
/// error.
double zero_eig_threshold(Index n, double norm_max, const Tolerances& tol = {});

/// Max-abs-entry norm (largest complex modulus).
double max_abs_entry(const ComplexMatrix& m);

/// A square complex matrix stored in exactly Hermitianized form (M + M†)/2,
/// with the asymmetry of the input recorded as hermiticity_defect.
class HermitianMatrix {
 public:
  /// Validates finiteness and squareness, records the defect, stores the
  /// Hermitianized matrix. Throws DomainError when the defect exceeds the
  /// tolerance or an entry is not finite.
  explicit HermitianMatrix(const ComplexMatrix& m, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  double hermiticity_defect() const { return defect_; }
  /// Cached max-abs-entry norm.
  double norm_max() const { return norm_max_; }
  /// Trace (real for Hermitian matrices).
  double trace() const { return mat_.trace().real(); }

  /// Wraps a matrix that is Hermitian by construction (e.g. a real linear
  /// combination of stored Hermitian matrices). Skips re-symmetrization so
  /// entries stay bit-identical to the caller's arithmetic.
  static HermitianMatrix trusted(ComplexMatrix m);

 private:
  HermitianMatrix() = default;

  ComplexMatrix mat_;
  double defect_ = 0.0;
  double norm_max_ = 0.0;
};

/// Positive semi-definite Hermitian matrix. Eigenvalues within the clamp
/// threshold of zero count as zero; construction rejects anything more
/// negative.
class PsdhMatrix {
 public:
  explicit PsdhMatrix(HermitianMatrix m, const Tolerances& tol = {});
  explicit PsdhMatrix(const ComplexMatrix& m, const Tolerances& tol = {});

  const HermitianMatrix& hermitian() const { return base_; }
  const ComplexMatrix& matrix() const { return base_.matrix(); }
  Index dim() const { return base_.dim(); }
  double trace() const { return base_.trace(); }
  double norm_max() const { return base_.norm_max(); }
  /// Smallest raw eigenvalue seen at validation (may be slightly negative,
  /// within the clamp threshold).
  double min_eigenvalue() const { return min_eig_; }

 private:
  HermitianMatrix base_;
  double min_eig_ = 0.0;
};

/// Psdh matrix with unit trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(PsdhMatrix m, const Tolerances& tol = {});
  explicit DensityMatrix(const ComplexMatrix& m, const Tolerances& tol = {});

  const PsdhMatrix& psdh() const { return base_; }
  const HermitianMatrix& hermitian() const { return base_.hermitian(); }
  const ComplexMatrix& matrix() const { return base_.matrix(); }
  Index dim() const { return base_.dim(); }

 private:
  PsdhMatrix base_;
};

/// Eigendecomposition A = U diag(eigenvalues) U† with eigenvalues ascending.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;  // columns
};

}  // namespace qrelent

#endif  // QRELENT_MATRIX_HPP
