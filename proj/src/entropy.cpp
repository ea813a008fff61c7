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

#include "qrelent/entropy.hpp"

#include <cmath>
#include <string>

#include "qrelent/errors.hpp"
#include "qrelent/hermitian_ops.hpp"
#include "qrelent/kernels.hpp"

namespace qrelent {

double von_neumann_entropy(const PsdhMatrix& rho, const Tolerances& tol) {
  const Eigen::VectorXd w = eigenvalues_only(rho.hermitian());
  const double eps = zero_eig_threshold(rho.dim(), rho.norm_max(), tol);
  double s = 0.0;
  for (Index i = 0; i < w.size(); ++i) {
    if (w[i] > eps) s -= w[i] * std::log(w[i]);
  }
  return s;
}

EntropyValue relative_entropy_spectral(const PsdhMatrix& rho, const PsdhMatrix& sigma,
                                       const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("relative_entropy_spectral: dimensions " +
                            std::to_string(rho.dim()) + " vs " +
                            std::to_string(sigma.dim()));
  }
  if (!support_contained(rho, sigma, tol)) {
    return EntropyValue::infinite();
  }

  // tr rho log rho from rho's spectrum; eigenvalues clamped to zero
  // contribute nothing (0 log 0 = 0).
  const Eigen::VectorXd lam = eigenvalues_only(rho.hermitian());
  const double eps_rho = zero_eig_threshold(rho.dim(), rho.norm_max(), tol);
  double tr_rho_log_rho = 0.0;
  for (Index i = 0; i < lam.size(); ++i) {
    if (lam[i] > eps_rho) tr_rho_log_rho += lam[i] * std::log(lam[i]);
  }

  // tr rho log sigma restricted to the support of sigma.
  const SpectralDecomposition sd = eig_hermitian(sigma.hermitian(), tol);
  const double eps_sigma = zero_eig_threshold(sigma.dim(), sigma.norm_max(), tol);
  double tr_rho_log_sigma = 0.0;
  for (Index i = 0; i < sd.eigenvalues.size(); ++i) {
    const double s = sd.eigenvalues[i];
    if (s > eps_sigma) {
      const Complex overlap =
          sd.eigenvectors.col(i).adjoint() * rho.matrix() * sd.eigenvectors.col(i);
      tr_rho_log_sigma += std::log(s) * overlap.real();
    }
  }

  return EntropyValue::of(tr_rho_log_rho - tr_rho_log_sigma);
}

double binary_entropy(double x) {
  constexpr double slack = 1e-12;
  if (x < -slack || x > 1.0 + slack) {
    throw DomainError("binary_entropy: argument " + std::to_string(x) +
                      " outside [0, 1]");
  }
  if (x < 0.0) x = 0.0;
  if (x > 1.0) x = 1.0;
  double h = 0.0;
  if (x > 0.0) h -= x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x);
  return h;
}

double holevo_chi(const std::vector<PsdhMatrix>& states, const std::vector<double>& weights,
                  const Tolerances& tol) {
  if (states.empty() || states.size() != weights.size()) {
    throw WeightError("holevo_chi: need matching non-empty states and weights");
  }
  const Index n = states.front().dim();
  double wsum = 0.0;
  for (double w : weights) {
    if (w <= 0.0) throw WeightError("holevo_chi: weights must be positive");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12) {
    throw WeightError("holevo_chi: weights sum to " + std::to_string(wsum));
  }

  ComplexMatrix mix = ComplexMatrix::Zero(n, n);
  double entropy_avg = 0.0;
  for (std::size_t j = 0; j < states.size(); ++j) {
    if (states[j].dim() != n) {
      throw DimensionMismatch("holevo_chi: state dimensions differ");
    }
    kernels::accumulate_scaled(mix.data(), weights[j], states[j].matrix().data(),
                               static_cast<std::size_t>(mix.size()));
    entropy_avg += weights[j] * von_neumann_entropy(states[j], tol);
  }
  const PsdhMatrix mixture(HermitianMatrix::trusted(std::move(mix)), tol);
  return von_neumann_entropy(mixture, tol) - entropy_avg;
}

}  // namespace qrelent
