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

// Compiled with -mavx2 -mfma; entered only after a runtime CPU check.

#include "qrelent/kernels.hpp"

#if defined(QRELENT_KERNELS_X86)

#include <immintrin.h>

#include <cmath>

namespace qrelent::kernels::avx2 {

void axpby(double a, const Complex* x, double b, const Complex* y, Complex* out,
           std::size_t count) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  double* od = reinterpret_cast<double*>(out);
  const std::size_t n = 2 * count;

  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(xd + i);
    const __m256d vy = _mm256_loadu_pd(yd + i);
    _mm256_storeu_pd(od + i, _mm256_fmadd_pd(va, vx, _mm256_mul_pd(vb, vy)));
  }
  for (; i < n; ++i) {
    od[i] = std::fma(a, xd[i], b * yd[i]);
  }
}

void accumulate_scaled(Complex* acc, double w, const Complex* x, std::size_t count) {
  double* ad = reinterpret_cast<double*>(acc);
  const double* xd = reinterpret_cast<const double*>(x);
  const std::size_t n = 2 * count;

  const __m256d vw = _mm256_set1_pd(w);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(xd + i);
    const __m256d va = _mm256_loadu_pd(ad + i);
    _mm256_storeu_pd(ad + i, _mm256_fmadd_pd(vw, vx, va));
  }
  for (; i < n; ++i) {
    ad[i] = std::fma(w, xd[i], ad[i]);
  }
}

double max_abs_sq(const Complex* x, std::size_t count) {
  const double* xd = reinterpret_cast<const double*>(x);

  __m256d vbest = _mm256_setzero_pd();
  std::size_t i = 0;
  // [re0 im0 re1 im1] -> squared moduli in both halves of a hadd.
  for (; i + 2 <= count; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    const __m256d sq = _mm256_mul_pd(v, v);
    vbest = _mm256_max_pd(vbest, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vbest);
  double best = lanes[0];
  if (lanes[1] > best) best = lanes[1];
  if (lanes[2] > best) best = lanes[2];
  if (lanes[3] > best) best = lanes[3];
  for (; i < count; ++i) {
    const double re = xd[2 * i];
    const double im = xd[2 * i + 1];
    const double m = re * re + im * im;
    if (m > best) best = m;
  }
  return best;
}

SignedSums signed_sums(const double* vals, std::size_t count, double clamp_eps) {
  const __m256d veps = _mm256_set1_pd(clamp_eps);
  const __m256d vneps = _mm256_set1_pd(-clamp_eps);
  __m256d vpos = _mm256_setzero_pd();
  __m256d vneg = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d v = _mm256_loadu_pd(vals + i);
    const __m256d pos_mask = _mm256_cmp_pd(v, veps, _CMP_GT_OQ);
    const __m256d neg_mask = _mm256_cmp_pd(v, vneps, _CMP_LT_OQ);
    vpos = _mm256_add_pd(vpos, _mm256_and_pd(v, pos_mask));
    vneg = _mm256_sub_pd(vneg, _mm256_and_pd(v, neg_mask));
  }
  alignas(32) double pl[4];
  alignas(32) double nl[4];
  _mm256_store_pd(pl, vpos);
  _mm256_store_pd(nl, vneg);
  double pos = (pl[0] + pl[1]) + (pl[2] + pl[3]);
  double neg = (nl[0] + nl[1]) + (nl[2] + nl[3]);
  for (; i < count; ++i) {
    const double v = vals[i];
    if (v > clamp_eps) {
      pos += v;
    } else if (v < -clamp_eps) {
      neg += -v;
    }
  }
  return {pos, neg};
}

}  // namespace qrelent::kernels::avx2

#endif  // QRELENT_KERNELS_X86
