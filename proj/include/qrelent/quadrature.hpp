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

#ifndef QRELENT_QUADRATURE_HPP
#define QRELENT_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "qrelent/errors.hpp"

namespace qrelent {

struct QuadConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Thrown by callers of integrate() that treat non-convergence as an error.
/// Carries the partial result.
class QuadNotConverged : public Error {
 public:
  QuadNotConverged(const std::string& what, QuadResult partial)
      : Error(what), partial_result(partial) {}
  QuadResult partial_result;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f over (a, b), where a and b
/// may be -inf / +inf. Infinite tails are compactified by the rational map
/// t = c +/- u/(1-u), u in [0,1), so integrands with 1/t^2-or-faster decay
/// transform to bounded ones. Breakpoints must lie strictly inside (a, b);
/// they seed the initial subdivision so integrand kinks at known locations
/// never sit inside a panel. Subdivision continues until the global error
/// estimate meets max(abs_tol, rel_tol * |value|) or max_subdivisions panels
/// exist; in the latter case converged=false and the best estimate is
/// returned. A NaN or Inf integrand value at a node throws
/// NonFiniteIntegrand.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const std::vector<double>& breakpoints, const QuadConfig& config = {});

}  // namespace qrelent

#endif  // QRELENT_QUADRATURE_HPP
