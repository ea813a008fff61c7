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

#include <cstdlib>
#include <cstring>

#include "qrelent/kernels.hpp"

namespace qrelent::kernels {

bool avx2_supported() {
#if defined(QRELENT_KERNELS_X86) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

struct Table {
  void (*axpby)(double, const Complex*, double, const Complex*, Complex*, std::size_t);
  void (*accumulate_scaled)(Complex*, double, const Complex*, std::size_t);
  double (*max_abs_sq)(const Complex*, std::size_t);
  SignedSums (*signed_sums)(const double*, std::size_t, double);
  const char* name;
};

constexpr Table kScalarTable = {&scalar::axpby, &scalar::accumulate_scaled,
                                &scalar::max_abs_sq, &scalar::signed_sums, "scalar"};

#if defined(QRELENT_KERNELS_X86)
constexpr Table kAvx2Table = {&avx2::axpby, &avx2::accumulate_scaled, &avx2::max_abs_sq,
                              &avx2::signed_sums, "avx2"};
#endif

Table select() {
  const char* env = std::getenv("QRELENT_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return kScalarTable;
#if defined(QRELENT_KERNELS_X86)
  if (env != nullptr && std::strcmp(env, "avx2") == 0 && avx2_supported()) return kAvx2Table;
  if (env == nullptr && avx2_supported()) return kAvx2Table;
#endif
  return kScalarTable;
}

const Table& active() {
  static const Table table = select();
  return table;
}

}  // namespace

const char* active_isa_name() { return active().name; }

void axpby(double a, const Complex* x, double b, const Complex* y, Complex* out,
           std::size_t count) {
  active().axpby(a, x, b, y, out, count);
}

void accumulate_scaled(Complex* acc, double w, const Complex* x, std::size_t count) {
  active().accumulate_scaled(acc, w, x, count);
}

double max_abs_sq(const Complex* x, std::size_t count) {
  return active().max_abs_sq(x, count);
}

SignedSums signed_sums(const double* vals, std::size_t count, double clamp_eps) {
  return active().signed_sums(vals, count, clamp_eps);
}

}  // namespace qrelent::kernels
