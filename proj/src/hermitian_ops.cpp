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

#include "qrelent/hermitian_ops.hpp"

#include <cmath>
#include <string>

#include "qrelent/errors.hpp"
#include "qrelent/kernels.hpp"

namespace qrelent {

SpectralDecomposition eig_hermitian(const HermitianMatrix& a, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("hermitian eigensolver did not converge");
  }
  SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors()};

  const double eps =
      tol.recon_rel * a.norm_max() * static_cast<double>(a.dim()) +
      tol.recon_rel;  // absolute floor for near-zero matrices
  const ComplexMatrix recon = out.eigenvectors *
                              out.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                              out.eigenvectors.adjoint();
  if (max_abs_entry(recon - a.matrix()) > eps) {
    throw ConvergenceFailure("spectral reconstruction defect exceeds tolerance");
  }
  const ComplexMatrix gram = out.eigenvectors.adjoint() * out.eigenvectors;
  if (max_abs_entry(gram - ComplexMatrix::Identity(a.dim(), a.dim())) > eps) {
    throw ConvergenceFailure("eigenvector matrix is not unitary within tolerance");
  }
  return out;
}

Eigen::VectorXd eigenvalues_only(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

SignedTrace tr_signed(const HermitianMatrix& a, const Tolerances& tol) {
  const Eigen::VectorXd w = eigenvalues_only(a);
  const double eps = zero_eig_threshold(a.dim(), a.norm_max(), tol);
  const kernels::SignedSums s =
      kernels::signed_sums(w.data(), static_cast<std::size_t>(w.size()), eps);
  return {s.pos, s.neg};
}

double trace_norm(const HermitianMatrix& a, const Tolerances& tol) {
  const SignedTrace s = tr_signed(a, tol);
  return s.plus + s.minus;
}

bool support_contained(const PsdhMatrix& rho, const PsdhMatrix& sigma,
                       const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("support_contained: dimensions " + std::to_string(rho.dim()) +
                            " vs " + std::to_string(sigma.dim()));
  }
  const SpectralDecomposition sd = eig_hermitian(sigma.hermitian(), tol);
  const double eps = zero_eig_threshold(sigma.dim(), sigma.norm_max(), tol);

  Index kernel_dim = 0;
  while (kernel_dim < sd.eigenvalues.size() && sd.eigenvalues[kernel_dim] <= eps) {
    ++kernel_dim;
  }
  if (kernel_dim == 0) return true;  // sigma full rank

  const ComplexMatrix k = sd.eigenvectors.leftCols(kernel_dim);
  const ComplexMatrix compressed = k.adjoint() * rho.matrix() * k;
  return max_abs_entry(compressed) <= tol.support_rel * rho.norm_max();
}

PsdhMatrix matrix_abs(const HermitianMatrix& a, const Tolerances& tol) {
  const SpectralDecomposition sd = eig_hermitian(a, tol);
  const Eigen::VectorXd w = sd.eigenvalues.cwiseAbs();
  ComplexMatrix abs_m = sd.eigenvectors * w.asDiagonal().toDenseMatrix().cast<Complex>() *
                        sd.eigenvectors.adjoint();
  return PsdhMatrix(HermitianMatrix(abs_m, tol), tol);
}

ComplexMatrix ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

DensityMatrix random_density(Index n, Index rank, std::uint64_t seed,
                             const Tolerances& tol) {
  if (n < 1 || rank < 1 || rank > n) {
    throw DomainError("random_density: need 1 <= rank <= n");
  }
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = ginibre(n, rank, rng);
  ComplexMatrix w = g * g.adjoint();
  w /= w.trace().real();
  // w is Hermitian up to products of conjugate pairs; symmetrize explicitly.
  return DensityMatrix(PsdhMatrix(HermitianMatrix(w, tol), tol), tol);
}

HermitianMatrix random_hermitian(Index n, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  const ComplexMatrix h = 0.5 * (g + g.adjoint());
  return HermitianMatrix(h);
}

HermitianMatrix random_traceless_hermitian(Index n, std::mt19937_64& rng,
                                           const Tolerances& tol) {
  HermitianMatrix h = random_hermitian(n, rng);
  ComplexMatrix m = h.matrix();
  m -= (m.trace() / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
  HermitianMatrix traceless(m, tol);
  const double norm = trace_norm(traceless, tol);
  if (norm <= 0.0) {
    throw DomainError("random_traceless_hermitian: degenerate draw");
  }
  return HermitianMatrix(ComplexMatrix(m / norm), tol);
}

ComplexMatrix random_unitary(Index n, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase convention so the distribution is Haar.
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mod = std::abs(d);
    if (mod > 0.0) q.col(j) *= d / mod;
  }
  return q;
}

}  // namespace qrelent
