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

#include "qrelent/kernels.hpp"

#include <cmath>

namespace qrelent::kernels::scalar {

// std::complex<double>[n] is layout-compatible with double[2n].

void axpby(double a, const Complex* x, double b, const Complex* y, Complex* out,
           std::size_t count) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  double* od = reinterpret_cast<double*>(out);
  const std::size_t n = 2 * count;
  for (std::size_t i = 0; i < n; ++i) {
    od[i] = std::fma(a, xd[i], b * yd[i]);
  }
}

void accumulate_scaled(Complex* acc, double w, const Complex* x, std::size_t count) {
  double* ad = reinterpret_cast<double*>(acc);
  const double* xd = reinterpret_cast<const double*>(x);
  const std::size_t n = 2 * count;
  for (std::size_t i = 0; i < n; ++i) {
    ad[i] = std::fma(w, xd[i], ad[i]);
  }
}

double max_abs_sq(const Complex* x, std::size_t count) {
  const double* xd = reinterpret_cast<const double*>(x);
  double best = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double re = xd[2 * i];
    const double im = xd[2 * i + 1];
    const double m = re * re + im * im;
    if (m > best) best = m;
  }
  return best;
}

SignedSums signed_sums(const double* vals, std::size_t count, double clamp_eps) {
  double pos = 0.0;
  double neg = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double v = vals[i];
    if (v > clamp_eps) {
      pos += v;
    } else if (v < -clamp_eps) {
      neg += -v;
    }
  }
  return {pos, neg};
}

}  // namespace qrelent::kernels::scalar
