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

#ifndef QRELENT_PENCIL_HPP
#define QRELENT_PENCIL_HPP

#include "qrelent/matrix.hpp"

namespace qrelent {

enum class PencilForm { Affine, Ray };

/// Maximal interval of t around 0 on which the pencil stays psdh.
/// Endpoints may be infinite. Strictly inside the interval the negative
/// spectral mass is zero after clamping.
struct PositivityWindow {
  double t_lo;  // <= 0
  double t_hi;  // >= 0
};

/// One-parameter Hermitian family: (1-t) rho + t sigma (Affine) or
/// rho + t sigma (Ray). Affine requires sigma psdh; Ray requires the range of
/// sigma to lie inside the range of rho. Values are immutable and safe to
/// share across threads.
class Pencil {
 public:
  static Pencil affine(const PsdhMatrix& rho, const PsdhMatrix& sigma);

  /// Throws SupportViolation when im sigma is not contained in im rho
  /// (tested via |sigma|).
  static Pencil ray(const PsdhMatrix& rho, const HermitianMatrix& sigma,
                    const Tolerances& tol = {});

  PencilForm form() const { return form_; }
  Index dim() const { return rho_.dim(); }
  const HermitianMatrix& rho() const { return rho_; }
  const HermitianMatrix& sigma() const { return sigma_; }
  double rho_trace() const { return rho_.trace(); }
  double sigma_trace() const { return sigma_.trace(); }

  HermitianMatrix eval(double t) const;

  /// Sum of absolute values of negative eigenvalues of eval(t), after
  /// clamping.
  double tr_neg_at(double t, const Tolerances& tol = {}) const;

  /// tr+ eval(t) - tr rho. Affine form only.
  double tr_pos_deficit_at(double t, const Tolerances& tol = {}) const;

  /// Positivity window edges found by doubling + bisection on the smallest
  /// eigenvalue (concave in t, so the psdh region is an interval). The
  /// returned endpoints are certified: the pencil at the endpoint itself
  /// still passes the psdh clamp. An endpoint where the smallest eigenvalue
  /// stays nonnegative out to t = 2^60 is reported infinite.
  PositivityWindow positivity_window(const Tolerances& tol = {}) const;

 private:
  Pencil(HermitianMatrix rho, HermitianMatrix sigma, PencilForm form)
      : rho_(std::move(rho)), sigma_(std::move(sigma)), form_(form) {}

  HermitianMatrix rho_;
  HermitianMatrix sigma_;
  PencilForm form_;
};

}  // namespace qrelent

#endif  // QRELENT_PENCIL_HPP
