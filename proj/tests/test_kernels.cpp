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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <doctest.h>

#include "qrelent/kernels.hpp"

namespace {

using qrelent::kernels::Complex;
using qrelent::kernels::SignedSums;

std::vector<Complex> random_complex(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> out(count);
  for (auto& z : out) z = Complex(gauss(rng), gauss(rng));
  return out;
}

std::vector<double> random_reals(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> out(count);
  for (auto& v : out) v = gauss(rng);
  return out;
}

// Odd lengths exercise the scalar tail after the vector body.
const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 15, 16, 17, 64, 101};

}  // namespace

TEST_CASE("axpby matches the scalar reference bit for bit") {
  for (std::size_t count : kLengths) {
    const auto x = random_complex(count, 11 + count);
    const auto y = random_complex(count, 22 + count);
    std::vector<Complex> ref(count), got(count);
    qrelent::kernels::scalar::axpby(0.75, x.data(), -1.25, y.data(), ref.data(), count);
    qrelent::kernels::axpby(0.75, x.data(), -1.25, y.data(), got.data(), count);
    for (std::size_t i = 0; i < count; ++i) {
      CHECK(ref[i].real() == got[i].real());
      CHECK(ref[i].imag() == got[i].imag());
    }
#if defined(QRELENT_KERNELS_X86)
    if (qrelent::kernels::avx2_supported()) {
      std::vector<Complex> vec(count);
      qrelent::kernels::avx2::axpby(0.75, x.data(), -1.25, y.data(), vec.data(), count);
      for (std::size_t i = 0; i < count; ++i) {
        CHECK(ref[i].real() == vec[i].real());
        CHECK(ref[i].imag() == vec[i].imag());
      }
    }
#endif
  }
}

TEST_CASE("accumulate_scaled matches the scalar reference bit for bit") {
  for (std::size_t count : kLengths) {
    const auto x = random_complex(count, 33 + count);
    const auto base = random_complex(count, 44 + count);
    std::vector<Complex> ref = base, got = base;
    qrelent::kernels::scalar::accumulate_scaled(ref.data(), 0.31, x.data(), count);
    qrelent::kernels::accumulate_scaled(got.data(), 0.31, x.data(), count);
    for (std::size_t i = 0; i < count; ++i) {
      CHECK(ref[i].real() == got[i].real());
      CHECK(ref[i].imag() == got[i].imag());
    }
#if defined(QRELENT_KERNELS_X86)
    if (qrelent::kernels::avx2_supported()) {
      std::vector<Complex> vec = base;
      qrelent::kernels::avx2::accumulate_scaled(vec.data(), 0.31, x.data(), count);
      for (std::size_t i = 0; i < count; ++i) {
        CHECK(ref[i].real() == vec[i].real());
        CHECK(ref[i].imag() == vec[i].imag());
      }
    }
#endif
  }
}

TEST_CASE("max_abs_sq matches the scalar reference bit for bit") {
  for (std::size_t count : kLengths) {
    const auto x = random_complex(count, 55 + count);
    const double ref = qrelent::kernels::scalar::max_abs_sq(x.data(), count);
    CHECK(qrelent::kernels::max_abs_sq(x.data(), count) == ref);
#if defined(QRELENT_KERNELS_X86)
    if (qrelent::kernels::avx2_supported()) {
      CHECK(qrelent::kernels::avx2::max_abs_sq(x.data(), count) == ref);
    }
#endif
  }
}

TEST_CASE("max_abs_sq of an empty span is zero") {
  CHECK(qrelent::kernels::max_abs_sq(nullptr, 0) == 0.0);
}

TEST_CASE("signed_sums splits and clamps") {
  const double vals[] = {3.0, -1.0, 0.25, -0.5, 1e-18, -1e-18};
  const SignedSums s = qrelent::kernels::signed_sums(vals, 6, 1e-12);
  CHECK(s.pos == doctest::Approx(3.25).epsilon(1e-15));
  CHECK(s.neg == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("signed_sums agrees with the scalar reference to a few ulp") {
  for (std::size_t count : kLengths) {
    const auto vals = random_reals(count, 66 + count);
    const SignedSums ref = qrelent::kernels::scalar::signed_sums(vals.data(), count, 1e-13);
    const SignedSums got = qrelent::kernels::signed_sums(vals.data(), count, 1e-13);
    const double scale = std::max(1.0, std::max(ref.pos, ref.neg));
    CHECK(std::fabs(ref.pos - got.pos) <= 1e-12 * scale);
    CHECK(std::fabs(ref.neg - got.neg) <= 1e-12 * scale);
#if defined(QRELENT_KERNELS_X86)
    if (qrelent::kernels::avx2_supported()) {
      const SignedSums vec = qrelent::kernels::avx2::signed_sums(vals.data(), count, 1e-13);
      CHECK(std::fabs(ref.pos - vec.pos) <= 1e-12 * scale);
      CHECK(std::fabs(ref.neg - vec.neg) <= 1e-12 * scale);
    }
#endif
  }
}

TEST_CASE("the dispatched path reports a valid implementation name") {
  const std::string name = qrelent::kernels::active_isa_name();
  CHECK((name == "scalar" || name == "avx2"));
#if !defined(QRELENT_KERNELS_X86)
  CHECK(name == "scalar");
#endif
}
