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

#ifndef QRELENT_HERMITIAN_OPS_HPP
#define QRELENT_HERMITIAN_OPS_HPP

#include <cstdint>
#include <random>

#include "qrelent/matrix.hpp"

namespace qrelent {

/// Signed trace split: plus = sum of positive eigenvalues, minus = sum of
/// absolute values of negative eigenvalues, both after zero-clamping.
struct SignedTrace {
  double plus;
  double minus;
};

/// Full eigendecomposition with ascending eigenvalues. Validates the
/// reconstruction U diag(w) U† against the input; throws ConvergenceFailure
/// when the solver fails or the reconstruction defect exceeds tolerance.
SpectralDecomposition eig_hermitian(const HermitianMatrix& a, const Tolerances& tol = {});

/// Eigenvalues only, ascending. Cheaper than eig_hermitian; used by the
/// evaluation-heavy paths.
Eigen::VectorXd eigenvalues_only(const HermitianMatrix& a);

SignedTrace tr_signed(const HermitianMatrix& a, const Tolerances& tol = {});

/// Trace norm: tr_plus + tr_minus.
double trace_norm(const HermitianMatrix& a, const Tolerances& tol = {});

/// True when the range of rho is contained in the range of sigma, tested as
/// ||P ker(sigma) rho P ker(sigma)||_max <= support_rel * ||rho||_max.
bool support_contained(const PsdhMatrix& rho, const PsdhMatrix& sigma,
                       const Tolerances& tol = {});

/// |A| = A+ + A- assembled from the eigendecomposition.
PsdhMatrix matrix_abs(const HermitianMatrix& a, const Tolerances& tol = {});

/// Deterministic Ginibre-based random density matrix of the given rank:
/// G G† / tr(G G†) with G an n x rank matrix of independent standard complex
/// Gaussians drawn from the seeded generator.
DensityMatrix random_density(Index n, Index rank, std::uint64_t seed,
                             const Tolerances& tol = {});

// Seeded sampling helpers shared by the property suites.

/// n x m matrix of independent standard complex Gaussians.
ComplexMatrix ginibre(Index rows, Index cols, std::mt19937_64& rng);

/// Random Hermitian matrix (G + G†)/2 with Ginibre G, entries O(1).
HermitianMatrix random_hermitian(Index n, std::mt19937_64& rng);

/// Random traceless Hermitian matrix normalized to unit trace norm.
HermitianMatrix random_traceless_hermitian(Index n, std::mt19937_64& rng,
                                           const Tolerances& tol = {});

/// Haar-like random unitary via phase-fixed QR of a Ginibre matrix.
ComplexMatrix random_unitary(Index n, std::mt19937_64& rng);

}  // namespace qrelent

#endif  // QRELENT_HERMITIAN_OPS_HPP
