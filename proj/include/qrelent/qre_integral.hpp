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

#ifndef QRELENT_QRE_INTEGRAL_HPP
#define QRELENT_QRE_INTEGRAL_HPP

#include "qrelent/entropy.hpp"
#include "qrelent/matrix.hpp"
#include "qrelent/quadrature.hpp"

namespace qrelent {

/// The two equivalent integral representations of the relative entropy.
/// FormOne: tr(rho - sigma) plus the full-line integral of
/// tr- A(t) / (|t| (t-1)^2) with A(t) = (1-t) rho + t sigma.
/// FormTwo: the split form, integrating (tr+ A(t) - tr rho) / (|t| (t-1)^2)
/// over the negative half-line and tr- A(t) / (|t| (t-1)^2) over the
/// positive one.
enum class IntegralForm { FormOne, FormTwo };

struct IntegralEntropyResult {
  EntropyValue entropy;
  QuadResult quadrature;  // all-zero when entropy is infinite (no integration)
};

/// Relative entropy through the pencil integral. Infinite when the range of
/// rho is not contained in the range of sigma. A rank-deficient sigma is
/// handled by restricting both matrices to its support before building the
/// pencil. The integrand is evaluated analytically (no eigensolve) strictly
/// inside the positivity window, where the negative spectral mass vanishes.
/// Throws QuadNotConverged when the quadrature fails to meet tolerance.
IntegralEntropyResult relative_entropy_integral(const PsdhMatrix& rho, const PsdhMatrix& sigma,
                                                IntegralForm form, const QuadConfig& qcfg = {},
                                                const Tolerances& tol = {});

struct DerivativeIntegralResult {
  double value;
  QuadResult quadrature;
};

/// Integral representation of the m-th directional derivative of von Neumann
/// entropy: returns -S^(m)(0)/m! for S(t) = entropy of rho + t sigma,
/// computed as the integral of tr-(rho + t sigma) / (|t| t^m) over the two
/// tails outside the positivity window. Requires the range of sigma inside
/// the range of rho (SupportViolation otherwise) and 2 <= m <= 20
/// (DomainError otherwise).
DerivativeIntegralResult entropy_derivative_integral(const PsdhMatrix& rho,
                                                     const HermitianMatrix& sigma, int m,
                                                     const QuadConfig& qcfg = {},
                                                     const Tolerances& tol = {});

/// Finite-difference oracle for the same derivative: the m-th central
/// difference of t -> S(rho + t sigma) at 0 with one Richardson
/// extrapolation level (steps h and h/2). Returns S^(m)(0) itself, without
/// the -1/m! normalization. Stencil points must stay inside the positivity
/// window (StencilOutOfWindow otherwise).
double entropy_derivative_fd(const PsdhMatrix& rho, const HermitianMatrix& sigma, int m,
                             double step, const Tolerances& tol = {});

/// Step choice for entropy_derivative_fd: min(2e-3, 0.05 * window radius).
double default_fd_step(const PsdhMatrix& rho, const HermitianMatrix& sigma,
                       const Tolerances& tol = {});

/// Exact integer factorial, m <= 20 (fits in 64 bits). DomainError beyond.
long long factorial(int m);

}  // namespace qrelent

#endif  // QRELENT_QRE_INTEGRAL_HPP
