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

#ifndef QRELENT_BINARY_BOUNDS_HPP
#define QRELENT_BINARY_BOUNDS_HPP

#include <utility>
#include <vector>

#include "qrelent/matrix.hpp"

namespace qrelent {

/// diag(t, 1-t).
struct BinaryClassicalState {
  double t;
};

/// Two-outcome measurement distinguishing a pair of states: projectors onto
/// the nonnegative and negative eigenspaces of rho1 - rho0, the outcome
/// probabilities t_j = tr E+ rho_j, and the pair's trace distance
/// ||rho1 - rho0||_1. The measurement preserves that trace distance:
/// t1 - t0 = trace_distance / 2.
struct BinaryReduction {
  PsdhMatrix e_plus;
  PsdhMatrix e_minus;
  double t0;
  double t1;
  double trace_distance;
};

/// Builds the distinguishing measurement from the spectral decomposition of
/// rho1 - rho0. Eigenvalues within the zero clamp go to the minus side.
/// Throws StatesEqual when the states coincide within tolerance.
BinaryReduction distinguishing_measurement(const DensityMatrix& rho0, const DensityMatrix& rho1,
                                           const Tolerances& tol = {});

/// Collapses a state pair to binary classical states with the same trace
/// distance; divergences that are monotone under two-outcome measurements
/// do not increase under this reduction.
std::pair<BinaryClassicalState, BinaryClassicalState> reduce_to_binary(
    const DensityMatrix& rho0, const DensityMatrix& rho1, const Tolerances& tol = {});

/// Classical mutual information of the binary ensemble
/// {diag(t0,1-t0) with weight q0, diag(t1,1-t1) with weight q1}:
/// h(q0 t0 + q1 t1) - q0 h(t0) - q1 h(t1), in nats.
double mutual_info_binary(double t0, double t1, double q0, double q1);

struct ChiMinResult {
  double minimum;
  double argmin_t0;
};

/// Tight lower bound on the Holevo quantity at prescribed trace distance T:
/// minimum of I(t0, t0 + T/2; q0, q1) over t0 in [0, 1 - T/2], located by a
/// 1024-point grid scan plus golden-section refinement to width 1e-10.
ChiMinResult chi_lower_bound_min(double T, double q0, double q1);

/// Explicit closed-form lower bound 4 q0 q1 (log 2 - h((2+T)/4)); weaker
/// than chi_lower_bound_min except at q1 = 1/2, where they coincide.
double explicit_weaker_bound(double T, double q0, double q1);

/// Kim's earlier bound q0 q1 T^2 / 2, strictly below explicit_weaker_bound
/// for T > 0 and nondegenerate weights.
double kim_bound(double T, double q0, double q1);

struct BoundsRow {
  double T;
  double q1;
  double min_bound;
  double explicit_bound;
  double kim_bound;
  double argmin_t0;
};

/// Bound comparison over T in linspace(0, 2, grid_T) x q1 in
/// linspace(0.01, 0.99, grid_q).
std::vector<BoundsRow> bounds_table(int grid_T, int grid_q);

}  // namespace qrelent

#endif  // QRELENT_BINARY_BOUNDS_HPP
