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

#ifndef QRELENT_ENTROPY_HPP
#define QRELENT_ENTROPY_HPP

#include <vector>

#include "qrelent/matrix.hpp"

namespace qrelent {

/// Entropy-type value in nats. finite=false encodes +infinity for
/// relative-entropy-type quantities; the numeric value is meaningless then.
struct EntropyValue {
  double value = 0.0;
  bool finite = true;

  static EntropyValue of(double v) { return {v, true}; }
  static EntropyValue infinite() { return {0.0, false}; }
};

/// von Neumann entropy S(rho) = -tr rho log rho in nats; 0 log 0 = 0.
/// Defined for psdh matrices of arbitrary trace.
double von_neumann_entropy(const PsdhMatrix& rho, const Tolerances& tol = {});

/// Umegaki relative entropy D(rho||sigma) = tr rho (log rho - log sigma) when
/// the range of rho is contained in the range of sigma, +infinity otherwise.
/// Computed on the support of sigma.
EntropyValue relative_entropy_spectral(const PsdhMatrix& rho, const PsdhMatrix& sigma,
                                       const Tolerances& tol = {});

/// Binary entropy h(x) = -x log x - (1-x) log(1-x), h(0) = h(1) = 0.
/// Arguments within 1e-12 outside [0,1] are clamped; beyond that DomainError.
double binary_entropy(double x);

/// Holevo quantity: S(sum q_j rho_j) - sum q_j S(rho_j).
double holevo_chi(const std::vector<PsdhMatrix>& states, const std::vector<double>& weights,
                  const Tolerances& tol = {});

}  // namespace qrelent

#endif  // QRELENT_ENTROPY_HPP
