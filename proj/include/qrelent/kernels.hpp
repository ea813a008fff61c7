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

#ifndef QRELENT_KERNELS_HPP
#define QRELENT_KERNELS_HPP

#include <complex>
#include <cstddef>

// Data-parallel inner loops used by the matrix layer: linear combination of
// complex matrices (pencil evaluation), scaled accumulation (mixtures), the
// max-abs-entry norm, and clamped signed eigenvalue sums.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The dispatched entry points pick one implementation per process at
// first use, based on runtime CPU support. The environment variable
// QRELENT_KERNELS=scalar|avx2 forces a path.
//
// axpby, accumulate_scaled and max_abs_sq are elementwise and produce
// bit-identical results on every path (both paths use fused multiply-add for
// the first two, plain mul/add for the third). signed_sums reduces in lanes,
// so its result may differ from the scalar path by a few ulp.

namespace qrelent::kernels {

using Complex = std::complex<double>;

struct SignedSums {
  double pos;  // sum of values > clamp_eps
  double neg;  // sum of |values| for values < -clamp_eps
};

namespace scalar {

void axpby(double a, const Complex* x, double b, const Complex* y, Complex* out,
           std::size_t count);
void accumulate_scaled(Complex* acc, double w, const Complex* x, std::size_t count);
double max_abs_sq(const Complex* x, std::size_t count);
SignedSums signed_sums(const double* vals, std::size_t count, double clamp_eps);

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define QRELENT_KERNELS_X86 1

namespace avx2 {

void axpby(double a, const Complex* x, double b, const Complex* y, Complex* out,
           std::size_t count);
void accumulate_scaled(Complex* acc, double w, const Complex* x, std::size_t count);
double max_abs_sq(const Complex* x, std::size_t count);
SignedSums signed_sums(const double* vals, std::size_t count, double clamp_eps);

}  // namespace avx2
#endif

/// True when the running CPU supports the AVX2+FMA path.
bool avx2_supported();

/// Name of the implementation the dispatched entry points resolve to.
const char* active_isa_name();

// Dispatched entry points.
void axpby(double a, const Complex* x, double b, const Complex* y, Complex* out,
           std::size_t count);
void accumulate_scaled(Complex* acc, double w, const Complex* x, std::size_t count);
double max_abs_sq(const Complex* x, std::size_t count);
SignedSums signed_sums(const double* vals, std::size_t count, double clamp_eps);

}  // namespace qrelent::kernels

#endif  // QRELENT_KERNELS_HPP
