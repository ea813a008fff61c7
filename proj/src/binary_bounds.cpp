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

#include "qrelent/binary_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qrelent/entropy.hpp"
#include "qrelent/errors.hpp"
#include "qrelent/hermitian_ops.hpp"

namespace qrelent {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

void check_probability(double x, const char* name) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    throw DomainError(std::string(name) + " must lie in [0, 1]");
  }
}

void check_weights(double q0, double q1) {
  check_probability(q0, "q0");
  check_probability(q1, "q1");
  if (std::fabs(q0 + q1 - 1.0) > 1e-12) throw DomainError("weights must sum to 1");
}

void check_trace_distance(double t) {
  if (!(t >= 0.0 && t <= 2.0)) {
    throw DomainError("trace distance of density matrices lies in [0, 2]");
  }
}

}  // namespace

BinaryReduction distinguishing_measurement(const DensityMatrix& rho0, const DensityMatrix& rho1,
                                           const Tolerances& tol) {
  if (rho0.dim() != rho1.dim()) throw DimensionMismatch("state dimensions differ");
  if (rho0.dim() < 2) throw DomainError("binary reduction needs dimension >= 2");

  const Index n = rho0.dim();
  const HermitianMatrix delta =
      HermitianMatrix::trusted(ComplexMatrix(rho1.matrix() - rho0.matrix()));
  const double eps = zero_eig_threshold(n, delta.norm_max(), tol);
  const SpectralDecomposition sd = eig_hermitian(delta, tol);

  double distance = 0.0;
  ComplexMatrix e_plus = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    distance += std::fabs(sd.eigenvalues(i)) > eps ? std::fabs(sd.eigenvalues(i)) : 0.0;
    if (sd.eigenvalues(i) > eps) {
      e_plus += sd.eigenvectors.col(i) * sd.eigenvectors.col(i).adjoint();
    }
  }
  if (!(distance > eps)) throw StatesEqual("states coincide within tolerance");

  const ComplexMatrix e_minus = ComplexMatrix::Identity(n, n) - e_plus;

  BinaryReduction r{PsdhMatrix(e_plus, tol), PsdhMatrix(e_minus, tol),
                    clamp01((e_plus * rho0.matrix()).trace().real()),
                    clamp01((e_plus * rho1.matrix()).trace().real()), distance};
  return r;
}

std::pair<BinaryClassicalState, BinaryClassicalState> reduce_to_binary(
    const DensityMatrix& rho0, const DensityMatrix& rho1, const Tolerances& tol) {
  const BinaryReduction r = distinguishing_measurement(rho0, rho1, tol);
  return {BinaryClassicalState{r.t0}, BinaryClassicalState{r.t1}};
}

double mutual_info_binary(double t0, double t1, double q0, double q1) {
  check_probability(t0, "t0");
  check_probability(t1, "t1");
  check_weights(q0, q1);
  return binary_entropy(q0 * t0 + q1 * t1) - q0 * binary_entropy(t0) - q1 * binary_entropy(t1);
}

ChiMinResult chi_lower_bound_min(double T, double q0, double q1) {
  check_trace_distance(T);
  check_weights(q0, q1);

  const double half = 0.5 * T;
  const double hi = 1.0 - half;
  auto phi = [&](double t0) { return mutual_info_binary(t0, t0 + half, q0, q1); };

  if (hi <= 0.0) return {phi(0.0), 0.0};

  // Coarse scan, then golden-section refinement of the best bracket.
  constexpr int kGrid = 1024;
  int best = 0;
  double best_val = phi(0.0);
  for (int i = 1; i < kGrid; ++i) {
    const double t = hi * i / (kGrid - 1);
    const double v = phi(t);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }

  double a = hi * std::max(0, best - 1) / (kGrid - 1);
  double b = hi * std::min(kGrid - 1, best + 1) / (kGrid - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = phi(x1);
  double f2 = phi(x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = phi(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = phi(x2);
    }
  }
  const double argmin = 0.5 * (a + b);
  // The objective is a mutual information, hence nonnegative; clamp away
  // cancellation noise at degenerate parameters (T = 0 in particular).
  return {std::max(0.0, phi(argmin)), argmin};
}

double explicit_weaker_bound(double T, double q0, double q1) {
  check_trace_distance(T);
  check_weights(q0, q1);
  return 4.0 * q0 * q1 * (std::log(2.0) - binary_entropy((2.0 + T) / 4.0));
}

double kim_bound(double T, double q0, double q1) {
  check_trace_distance(T);
  check_weights(q0, q1);
  return 0.5 * q0 * q1 * T * T;
}

std::vector<BoundsRow> bounds_table(int grid_T, int grid_q) {
  if (grid_T < 2 || grid_q < 2) throw DomainError("bounds table needs at least a 2x2 grid");
  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<std::size_t>(grid_T) * static_cast<std::size_t>(grid_q));
  for (int i = 0; i < grid_T; ++i) {
    const double T = 2.0 * i / (grid_T - 1);
    for (int j = 0; j < grid_q; ++j) {
      const double q1 = 0.01 + (0.99 - 0.01) * j / (grid_q - 1);
      const double q0 = 1.0 - q1;
      const ChiMinResult min_res = chi_lower_bound_min(T, q0, q1);
      rows.push_back({T, q1, min_res.minimum, explicit_weaker_bound(T, q0, q1),
                      kim_bound(T, q0, q1), min_res.argmin_t0});
    }
  }
  return rows;
}

}  // namespace qrelent
