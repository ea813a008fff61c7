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

#include "qrelent/channels.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "qrelent/errors.hpp"
#include "qrelent/hermitian_ops.hpp"
#include "qrelent/qre_integral.hpp"

namespace qrelent {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Input dimension a map insists on, when it has one (Transpose accepts any).
std::optional<Index> map_input_dim(const PositiveMapSpec& m) {
  return std::visit(
      Overloaded{
          [](const MeasurementSpec& s) -> std::optional<Index> {
            return s.povm.empty() ? std::nullopt : std::optional<Index>(s.povm[0].dim());
          },
          [](const KrausSpec& s) -> std::optional<Index> {
            return s.ops.empty() ? std::nullopt : std::optional<Index>(s.ops[0].cols());
          },
          [](const TransposeSpec&) -> std::optional<Index> { return std::nullopt; },
          [](const PinchingSpec& s) -> std::optional<Index> {
            return s.projectors.empty() ? std::nullopt
                                        : std::optional<Index>(s.projectors[0].dim());
          },
          [](const PartialTraceSpec& s) -> std::optional<Index> { return s.dim_a * s.dim_b; },
          [](const ComposeSpec& s) -> std::optional<Index> {
            for (const auto& child : s.maps) {
              if (auto d = map_input_dim(child)) return d;
            }
            return std::nullopt;
          },
      },
      m);
}

HermitianMatrix positive_part(const SpectralDecomposition& sd, double eps) {
  Eigen::VectorXd clipped = sd.eigenvalues;
  for (Index i = 0; i < clipped.size(); ++i) clipped(i) = clipped(i) > eps ? clipped(i) : 0.0;
  return HermitianMatrix(
      ComplexMatrix(sd.eigenvectors * clipped.asDiagonal() * sd.eigenvectors.adjoint()));
}

HermitianMatrix negative_part(const SpectralDecomposition& sd, double eps) {
  Eigen::VectorXd clipped = sd.eigenvalues;
  for (Index i = 0; i < clipped.size(); ++i) clipped(i) = clipped(i) < -eps ? -clipped(i) : 0.0;
  return HermitianMatrix(
      ComplexMatrix(sd.eigenvectors * clipped.asDiagonal() * sd.eigenvectors.adjoint()));
}

EqualityDiagnosticPoint diagnose_at(const PositiveMapSpec& m, const HermitianMatrix& a, double t,
                                    const Tolerances& tol) {
  const SpectralDecomposition sd = eig_hermitian(a, tol);
  const double eps = zero_eig_threshold(a.dim(), a.norm_max(), tol);
  const HermitianMatrix mapped_plus = apply_map(m, positive_part(sd, eps), tol);
  const HermitianMatrix mapped_minus = apply_map(m, negative_part(sd, eps), tol);
  EqualityDiagnosticPoint p;
  p.t = t;
  p.cross_norm = max_abs_entry(ComplexMatrix(mapped_plus.matrix() * mapped_minus.matrix()));
  p.defect_minus = tr_signed(a, tol).minus - tr_signed(apply_map(m, a, tol), tol).minus;
  return p;
}

HermitianMatrix affine_combination(const HermitianMatrix& x, const HermitianMatrix& y,
                                   double t) {
  return HermitianMatrix::trusted(ComplexMatrix((1.0 - t) * x.matrix() + t * y.matrix()));
}

}  // namespace

const std::vector<double>& default_diagnostic_grid() {
  static const std::vector<double> grid = {-3.0, -2.0, -1.0, -0.5, 0.0, 0.25,
                                           0.5,  0.75, 1.0,  1.5,  2.0, 3.0};
  return grid;
}

Index map_output_dim(const PositiveMapSpec& m, Index input_dim) {
  return std::visit(
      Overloaded{
          [](const MeasurementSpec& s) { return static_cast<Index>(s.povm.size()); },
          [](const KrausSpec& s) {
            return s.ops.empty() ? Index{0} : Index{s.ops[0].rows()};
          },
          [&](const TransposeSpec&) { return input_dim; },
          [&](const PinchingSpec&) { return input_dim; },
          [](const PartialTraceSpec& s) {
            return s.traced == TracedSide::B ? s.dim_a : s.dim_b;
          },
          [&](const ComposeSpec& s) {
            Index dim = input_dim;
            for (const auto& child : s.maps) dim = map_output_dim(child, dim);
            return dim;
          },
      },
      m);
}

HermitianMatrix apply_map(const PositiveMapSpec& m, const HermitianMatrix& a,
                          const Tolerances& tol) {
  const Index n = a.dim();
  return std::visit(
      Overloaded{
          [&](const MeasurementSpec& s) {
            if (s.povm.empty()) throw MalformedSpec("measurement needs at least one element");
            const Index k = static_cast<Index>(s.povm.size());
            ComplexMatrix out = ComplexMatrix::Zero(k, k);
            for (Index i = 0; i < k; ++i) {
              if (s.povm[i].dim() != n) {
                throw DimensionMismatch("POVM element dimension differs from input");
              }
              out(i, i) = (s.povm[i].matrix() * a.matrix()).trace().real();
            }
            return HermitianMatrix::trusted(std::move(out));
          },
          [&](const KrausSpec& s) {
            if (s.ops.empty()) throw MalformedSpec("Kraus family needs at least one operator");
            const Index rows = s.ops[0].rows();
            ComplexMatrix out = ComplexMatrix::Zero(rows, rows);
            for (const ComplexMatrix& k : s.ops) {
              if (k.cols() != n || k.rows() != rows) {
                throw DimensionMismatch("Kraus operator shape mismatch");
              }
              out += k * a.matrix() * k.adjoint();
            }
            return HermitianMatrix(out, tol);
          },
          [&](const TransposeSpec&) {
            return HermitianMatrix::trusted(a.matrix().transpose());
          },
          [&](const PinchingSpec& s) {
            if (s.projectors.empty()) throw MalformedSpec("pinching needs projectors");
            ComplexMatrix out = ComplexMatrix::Zero(n, n);
            for (const PsdhMatrix& p : s.projectors) {
              if (p.dim() != n) throw DimensionMismatch("projector dimension mismatch");
              out += p.matrix() * a.matrix() * p.matrix();
            }
            return HermitianMatrix(out, tol);
          },
          [&](const PartialTraceSpec& s) {
            if (s.dim_a < 1 || s.dim_b < 1) throw MalformedSpec("factor dimensions must be >= 1");
            if (s.dim_a * s.dim_b != n) {
              throw DimensionMismatch("input is not of the declared product dimension");
            }
            const Index da = s.dim_a;
            const Index db = s.dim_b;
            if (s.traced == TracedSide::B) {
              ComplexMatrix out = ComplexMatrix::Zero(da, da);
              for (Index i = 0; i < da; ++i) {
                for (Index j = 0; j < da; ++j) {
                  Complex acc = 0.0;
                  for (Index b = 0; b < db; ++b) acc += a.matrix()(i * db + b, j * db + b);
                  out(i, j) = acc;
                }
              }
              return HermitianMatrix::trusted(std::move(out));
            }
            ComplexMatrix out = ComplexMatrix::Zero(db, db);
            for (Index i = 0; i < db; ++i) {
              for (Index j = 0; j < db; ++j) {
                Complex acc = 0.0;
                for (Index x = 0; x < da; ++x) acc += a.matrix()(x * db + i, x * db + j);
                out(i, j) = acc;
              }
            }
            return HermitianMatrix::trusted(std::move(out));
          },
          [&](const ComposeSpec& s) {
            HermitianMatrix cur = a;
            for (const auto& child : s.maps) cur = apply_map(child, cur, tol);
            return cur;
          },
      },
      m);
}

MapValidation validate_map(const PositiveMapSpec& m, const Tolerances& tol) {
  auto from_operator_sum = [&tol](const ComplexMatrix& sum) {
    const Index n = sum.rows();
    const HermitianMatrix gap(ComplexMatrix(ComplexMatrix::Identity(n, n) - sum), tol);
    const Eigen::VectorXd ev = eigenvalues_only(gap);
    const double eps = zero_eig_threshold(n, std::max(1.0, max_abs_entry(sum)), tol);
    MapValidation v;
    v.preservation_defect = std::max(std::fabs(ev(0)), std::fabs(ev(ev.size() - 1)));
    v.nonincrease_defect = std::max(0.0, -ev(0));
    v.trace_preserving = v.preservation_defect <= eps;
    v.trace_nonincreasing = ev(0) >= -eps;
    return v;
  };

  return std::visit(
      Overloaded{
          [&](const MeasurementSpec& s) {
            if (s.povm.empty()) throw MalformedSpec("measurement needs at least one element");
            const Index n = s.povm[0].dim();
            ComplexMatrix sum = ComplexMatrix::Zero(n, n);
            for (const PsdhMatrix& e : s.povm) {
              if (e.dim() != n) throw MalformedSpec("POVM elements have mixed dimensions");
              sum += e.matrix();
            }
            return from_operator_sum(sum);
          },
          [&](const KrausSpec& s) {
            if (s.ops.empty()) throw MalformedSpec("Kraus family needs at least one operator");
            const Index rows = s.ops[0].rows();
            const Index cols = s.ops[0].cols();
            ComplexMatrix sum = ComplexMatrix::Zero(cols, cols);
            for (const ComplexMatrix& k : s.ops) {
              if (k.rows() != rows || k.cols() != cols) {
                throw MalformedSpec("Kraus operators have mixed shapes");
              }
              sum += k.adjoint() * k;
            }
            return from_operator_sum(sum);
          },
          [](const TransposeSpec&) {
            MapValidation v;
            v.trace_preserving = v.trace_nonincreasing = true;
            return v;
          },
          [&](const PinchingSpec& s) {
            if (s.projectors.empty()) throw MalformedSpec("pinching needs projectors");
            const Index n = s.projectors[0].dim();
            double defect = 0.0;
            ComplexMatrix sum = ComplexMatrix::Zero(n, n);
            for (std::size_t i = 0; i < s.projectors.size(); ++i) {
              const ComplexMatrix& p = s.projectors[i].matrix();
              if (s.projectors[i].dim() != n) {
                throw MalformedSpec("projectors have mixed dimensions");
              }
              defect = std::max(defect, max_abs_entry(ComplexMatrix(p * p - p)));
              for (std::size_t j = i + 1; j < s.projectors.size(); ++j) {
                defect = std::max(
                    defect, max_abs_entry(ComplexMatrix(p * s.projectors[j].matrix())));
              }
              sum += p;
            }
            defect = std::max(
                defect, max_abs_entry(ComplexMatrix(sum - ComplexMatrix::Identity(n, n))));
            MapValidation v;
            v.preservation_defect = defect;
            v.nonincrease_defect = defect;
            const double eps = zero_eig_threshold(n, 1.0, tol);
            v.trace_preserving = v.trace_nonincreasing = defect <= eps;
            return v;
          },
          [](const PartialTraceSpec& s) {
            if (s.dim_a < 1 || s.dim_b < 1) throw MalformedSpec("factor dimensions must be >= 1");
            MapValidation v;
            v.trace_preserving = v.trace_nonincreasing = true;
            return v;
          },
          [&](const ComposeSpec& s) {
            if (s.maps.empty()) throw MalformedSpec("compose spec has no maps");
            MapValidation v;
            v.trace_preserving = v.trace_nonincreasing = true;
            std::optional<Index> dim;
            for (const auto& child : s.maps) {
              const MapValidation cv = validate_map(child, tol);
              v.trace_preserving = v.trace_preserving && cv.trace_preserving;
              v.trace_nonincreasing = v.trace_nonincreasing && cv.trace_nonincreasing;
              v.preservation_defect = std::max(v.preservation_defect, cv.preservation_defect);
              v.nonincrease_defect = std::max(v.nonincrease_defect, cv.nonincrease_defect);
              if (auto need = map_input_dim(child)) {
                if (dim && *dim != *need) {
                  throw MalformedSpec("composed maps do not chain dimensionally");
                }
                dim = map_output_dim(child, *need);
              } else if (dim) {
                dim = map_output_dim(child, *dim);
              }
            }
            return v;
          },
      },
      m);
}

TrMonotonicityReport tr_monotonicity_check(const PositiveMapSpec& m, const HermitianMatrix& a,
                                           const Tolerances& tol) {
  const SignedTrace before = tr_signed(a, tol);
  const SignedTrace after = tr_signed(apply_map(m, a, tol), tol);

  TrMonotonicityReport r;
  r.plus_defect = before.plus - after.plus;
  r.minus_defect = before.minus - after.minus;
  r.ok = r.plus_defect >= -1e-10 && r.minus_defect >= -1e-10;

  if (r.plus_defect <= 1e-10 && r.minus_defect <= 1e-10) {
    const SpectralDecomposition sd = eig_hermitian(a, tol);
    const double eps = zero_eig_threshold(a.dim(), a.norm_max(), tol);
    const HermitianMatrix mapped_plus = apply_map(m, positive_part(sd, eps), tol);
    const HermitianMatrix mapped_minus = apply_map(m, negative_part(sd, eps), tol);
    const double cross =
        max_abs_entry(ComplexMatrix(mapped_plus.matrix() * mapped_minus.matrix()));
    r.equality = std::fabs(mapped_plus.trace() - before.plus) <= 1e-10 &&
                 std::fabs(mapped_minus.trace() - before.minus) <= 1e-10 && cross <= 1e-10;
  }
  return r;
}

DpiReport dpi_check(const PositiveMapSpec& m, const DensityMatrix& rho,
                    const DensityMatrix& sigma, const std::vector<double>& grid, DpiRoute route,
                    const QuadConfig& qcfg, const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("state dimensions differ");

  const HermitianMatrix mapped_rho_h = apply_map(m, rho.hermitian(), tol);
  if (std::fabs(mapped_rho_h.trace() - rho.hermitian().trace()) > 1e-10) {
    throw MapNotTracePreservingOnRho("map changes tr rho by more than 1e-10");
  }
  const PsdhMatrix mapped_rho(mapped_rho_h, tol);
  const PsdhMatrix mapped_sigma(apply_map(m, sigma.hermitian(), tol), tol);

  DpiReport rep;
  if (route == DpiRoute::Spectral) {
    rep.rhs = relative_entropy_spectral(rho.psdh(), sigma.psdh(), tol);
    rep.lhs = relative_entropy_spectral(mapped_rho, mapped_sigma, tol);
  } else {
    rep.rhs = relative_entropy_integral(rho.psdh(), sigma.psdh(), IntegralForm::FormOne, qcfg,
                                        tol)
                  .entropy;
    rep.lhs =
        relative_entropy_integral(mapped_rho, mapped_sigma, IntegralForm::FormOne, qcfg, tol)
            .entropy;
  }

  const double inf = std::numeric_limits<double>::infinity();
  if (!rep.rhs.finite) {
    rep.slack = inf;
    rep.satisfied = true;
  } else if (!rep.lhs.finite) {
    rep.slack = -inf;
    rep.satisfied = false;
  } else {
    rep.slack = rep.rhs.value - rep.lhs.value;
    rep.satisfied = rep.slack >= -1e-8;
  }

  const std::vector<double>& ts = grid.empty() ? default_diagnostic_grid() : grid;
  for (double t : ts) {
    rep.equality_diagnostic.push_back(
        diagnose_at(m, affine_combination(rho.hermitian(), sigma.hermitian(), t), t, tol));
  }
  return rep;
}

DpiReport holevo_dpi_check(const PositiveMapSpec& m, const std::vector<DensityMatrix>& states,
                           const std::vector<double>& weights, const std::vector<double>& grid,
                           const Tolerances& tol) {
  if (states.empty()) throw WeightError("ensemble must be nonempty");
  if (states.size() != weights.size()) {
    throw WeightError("ensemble and weight counts differ");
  }
  if (!validate_map(m, tol).trace_preserving) {
    throw MapNotTracePreservingOnRho("Holevo comparison needs a trace-preserving map");
  }

  std::vector<PsdhMatrix> originals;
  std::vector<PsdhMatrix> mapped;
  originals.reserve(states.size());
  mapped.reserve(states.size());
  for (const DensityMatrix& st : states) {
    if (st.dim() != states[0].dim()) throw DimensionMismatch("ensemble dimensions differ");
    originals.push_back(st.psdh());
    mapped.push_back(PsdhMatrix(apply_map(m, st.hermitian(), tol), tol));
  }

  DpiReport rep;
  rep.rhs = EntropyValue::of(holevo_chi(originals, weights, tol));
  rep.lhs = EntropyValue::of(holevo_chi(mapped, weights, tol));
  rep.slack = rep.rhs.value - rep.lhs.value;
  rep.satisfied = rep.slack >= -1e-8;

  const std::vector<double>& ts = grid.empty() ? default_diagnostic_grid() : grid;
  for (std::size_t j = 0; j < states.size(); ++j) {
    for (std::size_t k = j + 1; k < states.size(); ++k) {
      for (double t : ts) {
        rep.equality_diagnostic.push_back(diagnose_at(
            m, affine_combination(states[j].hermitian(), states[k].hermitian(), t), t, tol));
      }
    }
  }
  return rep;
}

std::vector<PsdhMatrix> random_povm(Index k, Index n, std::mt19937_64& rng,
                                    const Tolerances& tol) {
  if (k < 1 || n < 1) throw DomainError("POVM needs k >= 1 outcomes on dimension n >= 1");
  std::vector<ComplexMatrix> parts;
  parts.reserve(static_cast<std::size_t>(k));
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < k; ++i) {
    const ComplexMatrix g = ginibre(n, n, rng);
    parts.push_back(ComplexMatrix(g * g.adjoint()));
    sum += parts.back();
  }
  const SpectralDecomposition sd = eig_hermitian(HermitianMatrix(sum, tol), tol);
  Eigen::VectorXd inv_sqrt = sd.eigenvalues;
  for (Index i = 0; i < inv_sqrt.size(); ++i) inv_sqrt(i) = 1.0 / std::sqrt(inv_sqrt(i));
  const ComplexMatrix t =
      sd.eigenvectors * inv_sqrt.asDiagonal() * sd.eigenvectors.adjoint();

  std::vector<PsdhMatrix> povm;
  povm.reserve(parts.size());
  for (const ComplexMatrix& w : parts) {
    povm.push_back(PsdhMatrix(ComplexMatrix(t * w * t), tol));
  }
  return povm;
}

}  // namespace qrelent
