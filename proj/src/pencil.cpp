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

#include "qrelent/pencil.hpp"

#include <cmath>
#include <limits>

#include "qrelent/errors.hpp"
#include "qrelent/hermitian_ops.hpp"
#include "qrelent/kernels.hpp"

namespace qrelent {

namespace {

constexpr double kDoublingCap = 0x1p60;

}  // namespace

Pencil Pencil::affine(const PsdhMatrix& rho, const PsdhMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("pencil endpoints have different dimensions");
  }
  return Pencil(rho.hermitian(), sigma.hermitian(), PencilForm::Affine);
}

Pencil Pencil::ray(const PsdhMatrix& rho, const HermitianMatrix& sigma, const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("pencil endpoints have different dimensions");
  }
  if (sigma.norm_max() > 0.0 && !support_contained(matrix_abs(sigma, tol), rho, tol)) {
    throw SupportViolation("ray direction acts outside the base point's support");
  }
  return Pencil(rho.hermitian(), sigma, PencilForm::Ray);
}

HermitianMatrix Pencil::eval(double t) const {
  const double a = form_ == PencilForm::Affine ? 1.0 - t : 1.0;
  ComplexMatrix out(dim(), dim());
  kernels::axpby(a, rho_.matrix().data(), t, sigma_.matrix().data(), out.data(),
                 static_cast<std::size_t>(out.size()));
  return HermitianMatrix::trusted(std::move(out));
}

double Pencil::tr_neg_at(double t, const Tolerances& tol) const {
  return tr_signed(eval(t), tol).minus;
}

double Pencil::tr_pos_deficit_at(double t, const Tolerances& tol) const {
  if (form_ != PencilForm::Affine) {
    throw DomainError("tr_pos_deficit_at is defined for the affine form only");
  }
  return tr_signed(eval(t), tol).plus - rho_.trace();
}

PositivityWindow Pencil::positivity_window(const Tolerances& tol) const {
  auto psdh_at = [this, &tol](double t) {
    const HermitianMatrix a = eval(t);
    const double lambda_min = eigenvalues_only(a)(0);
    return lambda_min >= -zero_eig_threshold(a.dim(), a.norm_max(), tol);
  };

  if (!psdh_at(0.0)) {
    throw DomainError("pencil base point is not psdh within tolerance");
  }

  // One-sided edge search in direction s (+1 or -1): returns the certified
  // edge magnitude, or +inf when the pencil stays psdh out to the cap.
  auto edge = [&psdh_at](double s) {
    double lo = 0.0;
    double hi = 0.0;
    for (double t = 1.0; t <= kDoublingCap; t *= 2.0) {
      if (psdh_at(s * t)) {
        lo = t;
      } else {
        hi = t;
        break;
      }
    }
    if (hi == 0.0) return std::numeric_limits<double>::infinity();

    // lambda_min is concave in t, so {psdh} is an interval: bisect the
    // bracket [lo, hi). The iteration cap bounds the collapse case lo = 0,
    // where a relative width test alone would never fire.
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-12 * hi; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (psdh_at(s * mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  };

  PositivityWindow w;
  w.t_hi = edge(+1.0);
  w.t_lo = -edge(-1.0);
  return w;
}

}  // namespace qrelent
