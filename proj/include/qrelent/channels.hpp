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

#ifndef QRELENT_CHANNELS_HPP
#define QRELENT_CHANNELS_HPP

#include <random>
#include <variant>
#include <vector>

#include "qrelent/entropy.hpp"
#include "qrelent/matrix.hpp"
#include "qrelent/quadrature.hpp"

namespace qrelent {

// Positive trace-nonincreasing linear maps, described structurally. All act
// on Hermitian matrices and send psdh to psdh; none except Kraus and
// Measurement with an incomplete sum shrink traces.

/// A -> diag(tr E_1 A, ..., tr E_k A). Trace-preserving when the POVM sums
/// to the identity.
struct MeasurementSpec {
  std::vector<PsdhMatrix> povm;
};

/// A -> sum_i K_i A K_i*. Trace-nonincreasing when sum K_i* K_i <= 1.
struct KrausSpec {
  std::vector<ComplexMatrix> ops;
};

/// A -> A^T. Positive and trace-preserving but not completely positive.
struct TransposeSpec {};

/// A -> sum_j P_j A P_j for orthogonal projectors resolving the identity.
struct PinchingSpec {
  std::vector<PsdhMatrix> projectors;
};

enum class TracedSide { A, B };

/// Partial trace over one factor of C^{dim_a} (x) C^{dim_b}, row-major
/// composite indexing.
struct PartialTraceSpec {
  Index dim_a;
  Index dim_b;
  TracedSide traced;
};

struct ComposeSpec;

using PositiveMapSpec = std::variant<MeasurementSpec, KrausSpec, TransposeSpec, PinchingSpec,
                                     PartialTraceSpec, ComposeSpec>;

/// Sequential application, first entry applied first.
struct ComposeSpec {
  std::vector<PositiveMapSpec> maps;
};

struct MapValidation {
  bool trace_preserving = false;
  bool trace_nonincreasing = false;
  /// Largest |eigenvalue| of 1 - (POVM or Kraus sum); structural defect for
  /// pinching (idempotence, orthogonality, completeness); 0 for the
  /// built-in trace-preserving maps.
  double preservation_defect = 0.0;
  /// How far below zero 1 - sum dips: max(0, -lambda_min).
  double nonincrease_defect = 0.0;
};

struct TrMonotonicityReport {
  bool ok = false;
  double plus_defect = 0.0;   // tr+ A - tr+ EA
  double minus_defect = 0.0;  // tr- A - tr- EA
  bool equality = false;
};

struct EqualityDiagnosticPoint {
  double t;
  double cross_norm;     // || E(A(t)+) E(A(t)-) ||_max
  double defect_minus;   // tr- A(t) - tr- E(A(t))
};

struct DpiReport {
  EntropyValue lhs;  // mapped-side divergence
  EntropyValue rhs;  // original-side divergence
  double slack = 0.0;  // rhs - lhs, meaningful when both sides finite
  bool satisfied = false;
  std::vector<EqualityDiagnosticPoint> equality_diagnostic;
};

enum class DpiRoute { Spectral, Integral };

/// Default sampling grid for the affine-combination equality diagnostics.
const std::vector<double>& default_diagnostic_grid();

Index map_output_dim(const PositiveMapSpec& m, Index input_dim);

HermitianMatrix apply_map(const PositiveMapSpec& m, const HermitianMatrix& a,
                          const Tolerances& tol = {});

/// Checks the structural invariants by eigenvalue tests; throws
/// MalformedSpec for structurally broken specs (empty lists, inconsistent
/// dimensions).
MapValidation validate_map(const PositiveMapSpec& m, const Tolerances& tol = {});

/// tr+- monotonicity under the map: defects tr+- A - tr+- EA, ok when both
/// >= -1e-10. The equality flag additionally verifies the exact-equality
/// condition: traces of the mapped positive and negative parts preserved and
/// E(A+) E(A-) = 0, all within 1e-10.
TrMonotonicityReport tr_monotonicity_check(const PositiveMapSpec& m, const HermitianMatrix& a,
                                           const Tolerances& tol = {});

/// Data processing for relative entropy: lhs = D(E rho || E sigma),
/// rhs = D(rho || sigma). Requires tr E rho = tr rho within 1e-10
/// (MapNotTracePreservingOnRho otherwise). An infinite rhs satisfies the
/// inequality outright. Equality diagnostics are sampled on the given grid
/// of affine-combination parameters (default_diagnostic_grid() when empty).
DpiReport dpi_check(const PositiveMapSpec& m, const DensityMatrix& rho,
                    const DensityMatrix& sigma, const std::vector<double>& grid = {},
                    DpiRoute route = DpiRoute::Spectral, const QuadConfig& qcfg = {},
                    const Tolerances& tol = {});

/// Data processing for the Holevo quantity of an ensemble; diagnostics
/// sampled over pairwise affine combinations of the states.
DpiReport holevo_dpi_check(const PositiveMapSpec& m, const std::vector<DensityMatrix>& states,
                           const std::vector<double>& weights,
                           const std::vector<double>& grid = {}, const Tolerances& tol = {});

/// Random POVM with k outcomes on dimension n: Ginibre squares normalized by
/// the inverse square root of their sum, so the elements resolve the
/// identity exactly.
std::vector<PsdhMatrix> random_povm(Index k, Index n, std::mt19937_64& rng,
                                    const Tolerances& tol = {});

}  // namespace qrelent

#endif  // QRELENT_CHANNELS_HPP
