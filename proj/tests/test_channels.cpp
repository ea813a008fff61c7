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
#include <random>
#include <vector>

#include <doctest.h>

#include "qrelent/channels.hpp"
#include "qrelent/entropy.hpp"
#include "qrelent/errors.hpp"
#include "qrelent/hermitian_ops.hpp"

namespace {

using namespace qrelent;

PsdhMatrix diag_psd(const std::vector<double>& d) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Index>(i), static_cast<Index>(i)) = d[i];
  return PsdhMatrix(m);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("transpose flips the off-diagonal phases") {
  ComplexMatrix y(2, 2);
  y << Complex(0.0, 0.0), Complex(0.0, 1.0), Complex(0.0, -1.0), Complex(0.0, 0.0);
  const HermitianMatrix a(y);
  const HermitianMatrix b = apply_map(TransposeSpec{}, a);
  CHECK(b.matrix()(0, 1) == Complex(0.0, -1.0));
  CHECK(b.matrix()(1, 0) == Complex(0.0, 1.0));
  const MapValidation v = validate_map(PositiveMapSpec{TransposeSpec{}});
  CHECK(v.trace_preserving);
  CHECK(v.trace_nonincreasing);
}

TEST_CASE("measurement maps to the diagonal outcome distribution") {
  std::mt19937_64 rng(12);
  const std::vector<PsdhMatrix> povm = random_povm(3, 4, rng);
  const DensityMatrix rho = random_density(4, 4, 12);
  const HermitianMatrix out = apply_map(MeasurementSpec{povm}, rho.hermitian());
  REQUIRE(out.dim() == 3);
  double total = 0.0;
  for (Index i = 0; i < 3; ++i) {
    const double pi = out.matrix()(i, i).real();
    const double direct = (povm[static_cast<std::size_t>(i)].matrix() * rho.matrix())
                              .trace()
                              .real();
    CHECK(pi == doctest::Approx(direct).epsilon(1e-12));
    CHECK(pi >= -1e-12);
    total += pi;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      if (i != j) CHECK(std::abs(out.matrix()(i, j)) == 0.0);
    }
  }
}

TEST_CASE("partial trace of a product state recovers the factors") {
  const PsdhMatrix rho_a = diag_psd({0.7, 0.3});
  const DensityMatrix rho_b = random_density(3, 3, 55);
  const HermitianMatrix joint =
      HermitianMatrix::trusted(kron(rho_a.matrix(), rho_b.matrix()));

  const HermitianMatrix got_a =
      apply_map(PartialTraceSpec{2, 3, TracedSide::B}, joint);
  REQUIRE(got_a.dim() == 2);
  CHECK(max_abs_entry(got_a.matrix() - rho_a.matrix()) < 1e-13);

  const HermitianMatrix got_b =
      apply_map(PartialTraceSpec{2, 3, TracedSide::A}, joint);
  REQUIRE(got_b.dim() == 3);
  CHECK(max_abs_entry(got_b.matrix() - rho_b.matrix()) < 1e-13);
}

TEST_CASE("pinching keeps only the block diagonal") {
  ComplexMatrix p0 = ComplexMatrix::Zero(3, 3);
  p0(0, 0) = 1.0;
  p0(1, 1) = 1.0;
  ComplexMatrix p1 = ComplexMatrix::Zero(3, 3);
  p1(2, 2) = 1.0;
  const PinchingSpec pinch{{PsdhMatrix(p0), PsdhMatrix(p1)}};
  const DensityMatrix rho = random_density(3, 3, 91);
  const HermitianMatrix out = apply_map(PositiveMapSpec{pinch}, rho.hermitian());
  CHECK(std::abs(out.matrix()(0, 2)) == 0.0);
  CHECK(std::abs(out.matrix()(1, 2)) == 0.0);
  CHECK(out.matrix()(0, 1) == rho.matrix()(0, 1));
  CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-13));
  const MapValidation v = validate_map(PositiveMapSpec{pinch});
  CHECK(v.trace_preserving);
}

TEST_CASE("kraus channels apply the operator sum") {
  ComplexMatrix k0(2, 2), k1(2, 2);
  k0 << 1.0, 0.0, 0.0, std::sqrt(0.5);
  k1 << 0.0, std::sqrt(0.5), 0.0, 0.0;  // amplitude damping, gamma = 1/2
  const KrausSpec damp{{k0, k1}};
  const MapValidation v = validate_map(PositiveMapSpec{damp});
  CHECK(v.trace_preserving);
  const PsdhMatrix excited = diag_psd({0.0, 1.0});
  const HermitianMatrix out = apply_map(PositiveMapSpec{damp}, excited.hermitian());
  CHECK(out.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(out.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("validation classifies preserving, nonincreasing and oversized maps") {
  const PsdhMatrix half(0.5 * ComplexMatrix::Identity(2, 2));
  const MapValidation complete = validate_map(PositiveMapSpec{MeasurementSpec{{half, half}}});
  CHECK(complete.trace_preserving);
  CHECK(complete.trace_nonincreasing);

  ComplexMatrix shrink(2, 2);
  shrink << 1.0, 0.0, 0.0, 0.5;
  const MapValidation tni = validate_map(PositiveMapSpec{KrausSpec{{shrink}}});
  CHECK_FALSE(tni.trace_preserving);
  CHECK(tni.trace_nonincreasing);
  CHECK(tni.preservation_defect == doctest::Approx(0.75).epsilon(1e-12));

  const PsdhMatrix full(ComplexMatrix::Identity(2, 2));
  const MapValidation oversized = validate_map(PositiveMapSpec{MeasurementSpec{{full, full}}});
  CHECK_FALSE(oversized.trace_preserving);
  CHECK_FALSE(oversized.trace_nonincreasing);
  CHECK(oversized.nonincrease_defect == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("malformed specs are rejected") {
  CHECK_THROWS_AS(validate_map(PositiveMapSpec{MeasurementSpec{}}), MalformedSpec);
  CHECK_THROWS_AS(validate_map(PositiveMapSpec{KrausSpec{}}), MalformedSpec);
  CHECK_THROWS_AS(validate_map(PositiveMapSpec{ComposeSpec{}}), MalformedSpec);
  ComplexMatrix k2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix k3 = ComplexMatrix::Identity(3, 3);
  CHECK_THROWS_AS(validate_map(PositiveMapSpec{KrausSpec{{k2, k3}}}), MalformedSpec);
}

TEST_CASE("composition chains dimensions and rejects mismatches") {
  std::mt19937_64 rng(14);
  const std::vector<PsdhMatrix> povm = random_povm(3, 4, rng);
  const ComposeSpec ok{{PositiveMapSpec{TransposeSpec{}}, PositiveMapSpec{MeasurementSpec{povm}}}};
  CHECK(map_output_dim(PositiveMapSpec{ok}, 4) == 3);
  const DensityMatrix rho = random_density(4, 4, 14);
  const HermitianMatrix out = apply_map(PositiveMapSpec{ok}, rho.hermitian());
  CHECK(out.dim() == 3);
  CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-12));

  // A 3-outcome measurement feeding a 4-dimensional measurement cannot chain.
  const std::vector<PsdhMatrix> povm2 = random_povm(2, 4, rng);
  const ComposeSpec bad{{PositiveMapSpec{MeasurementSpec{povm}},
                         PositiveMapSpec{MeasurementSpec{povm2}}}};
  CHECK_THROWS_AS(validate_map(PositiveMapSpec{bad}), MalformedSpec);
}

TEST_CASE("signed traces never grow under positive trace-preserving maps") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 20; ++rep) {
    const HermitianMatrix a = random_hermitian(4, rng);
    const std::vector<PsdhMatrix> povm = random_povm(3, 4, rng);
    for (const PositiveMapSpec& m :
         {PositiveMapSpec{TransposeSpec{}}, PositiveMapSpec{MeasurementSpec{povm}}}) {
      const TrMonotonicityReport r = tr_monotonicity_check(m, a);
      CHECK(r.ok);
      CHECK(r.plus_defect >= -1e-10);
      CHECK(r.minus_defect >= -1e-10);
    }
  }
}

TEST_CASE("transpose attains signed-trace equality") {
  std::mt19937_64 rng(31);
  const HermitianMatrix a = random_hermitian(3, rng);
  const TrMonotonicityReport r = tr_monotonicity_check(PositiveMapSpec{TransposeSpec{}}, a);
  CHECK(r.ok);
  CHECK(std::fabs(r.plus_defect) < 1e-10);
  CHECK(std::fabs(r.minus_defect) < 1e-10);
  CHECK(r.equality);
}

TEST_CASE("a diagonal measurement of a diagonal matrix attains equality") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = -1.0;
  d(2, 2) = 0.5;
  const HermitianMatrix a(d);
  std::vector<PsdhMatrix> basis;
  for (Index i = 0; i < 3; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(3, 3);
    e(i, i) = 1.0;
    basis.push_back(PsdhMatrix(e));
  }
  const TrMonotonicityReport r =
      tr_monotonicity_check(PositiveMapSpec{MeasurementSpec{basis}}, a);
  CHECK(r.equality);
  CHECK(std::fabs(r.plus_defect) < 1e-12);
  CHECK(std::fabs(r.minus_defect) < 1e-12);
}

TEST_CASE("a coarse measurement of an indefinite matrix breaks equality") {
  // One POVM element mixing the positive and negative eigendirections makes
  // the mapped parts overlap.
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  const HermitianMatrix a(d);
  const PsdhMatrix whole(ComplexMatrix::Identity(2, 2));
  ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  const TrMonotonicityReport r = tr_monotonicity_check(
      PositiveMapSpec{MeasurementSpec{{whole, PsdhMatrix(zero)}}}, a);
  CHECK(r.ok);
  CHECK_FALSE(r.equality);
  CHECK(r.plus_defect == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.minus_defect == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dpi_check certifies the transpose as lossless") {
  const DensityMatrix rho = random_density(3, 3, 432);
  const DensityMatrix sigma = random_density(3, 3, 433);
  const DpiReport r = dpi_check(PositiveMapSpec{TransposeSpec{}}, rho, sigma);
  CHECK(r.satisfied);
  REQUIRE(r.lhs.finite);
  REQUIRE(r.rhs.finite);
  CHECK(std::fabs(r.slack) < 1e-10);
  REQUIRE_FALSE(r.equality_diagnostic.empty());
  for (const EqualityDiagnosticPoint& pt : r.equality_diagnostic) {
    CHECK(pt.cross_norm < 1e-10);
    CHECK(std::fabs(pt.defect_minus) < 1e-10);
  }
}

TEST_CASE("dpi_check on a partial trace shows strict contraction") {
  const DensityMatrix rho = random_density(4, 4, 434);
  const DensityMatrix sigma = random_density(4, 4, 435);
  const DpiReport r =
      dpi_check(PositiveMapSpec{PartialTraceSpec{2, 2, TracedSide::B}}, rho, sigma);
  CHECK(r.satisfied);
  CHECK(r.slack >= -1e-8);
}

TEST_CASE("dpi_check through the integral route matches the spectral route") {
  const DensityMatrix rho = random_density(3, 3, 436);
  const DensityMatrix sigma = random_density(3, 3, 437);
  std::mt19937_64 rng(438);
  const std::vector<PsdhMatrix> povm = random_povm(3, 3, rng);
  const DpiReport spect = dpi_check(PositiveMapSpec{MeasurementSpec{povm}}, rho, sigma, {},
                                    DpiRoute::Spectral);
  const DpiReport integ = dpi_check(PositiveMapSpec{MeasurementSpec{povm}}, rho, sigma, {},
                                    DpiRoute::Integral);
  CHECK(spect.satisfied);
  CHECK(integ.satisfied);
  CHECK(integ.slack == doctest::Approx(spect.slack).epsilon(1e-7));
}

TEST_CASE("dpi_check rejects maps that shrink the trace of rho") {
  ComplexMatrix shrink(2, 2);
  shrink << 1.0, 0.0, 0.0, 0.5;
  const DensityMatrix rho(0.5 * ComplexMatrix::Identity(2, 2));
  const DensityMatrix sigma = random_density(2, 2, 439);
  CHECK_THROWS_AS(dpi_check(PositiveMapSpec{KrausSpec{{shrink}}}, rho, sigma),
                  MapNotTracePreservingOnRho);
}

TEST_CASE("an infinite original divergence satisfies data processing outright") {
  ComplexMatrix r = ComplexMatrix::Zero(2, 2);
  r(0, 0) = 1.0;
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(1, 1) = 1.0;
  const DpiReport rep = dpi_check(PositiveMapSpec{TransposeSpec{}}, DensityMatrix(r),
                                  DensityMatrix(s));
  CHECK(rep.satisfied);
  CHECK_FALSE(rep.rhs.finite);
}

TEST_CASE("holevo data processing under a measurement") {
  std::vector<DensityMatrix> states;
  for (int j = 0; j < 3; ++j) states.push_back(random_density(3, 3, 440 + j));
  const std::vector<double> weights = {0.2, 0.3, 0.5};
  std::mt19937_64 rng(444);
  const std::vector<PsdhMatrix> povm = random_povm(3, 3, rng);
  const DpiReport r = holevo_dpi_check(PositiveMapSpec{MeasurementSpec{povm}}, states, weights);
  CHECK(r.satisfied);
  CHECK(r.slack >= -1e-8);
  REQUIRE(r.lhs.finite);
  CHECK(r.lhs.value >= -1e-12);
}

TEST_CASE("holevo_dpi_check validates weights and the map") {
  std::vector<DensityMatrix> states = {random_density(2, 2, 450), random_density(2, 2, 451)};
  CHECK_THROWS_AS(
      holevo_dpi_check(PositiveMapSpec{TransposeSpec{}}, states, {0.5, 0.4}),
      WeightError);
  ComplexMatrix shrink(2, 2);
  shrink << 1.0, 0.0, 0.0, 0.5;
  CHECK_THROWS_AS(
      holevo_dpi_check(PositiveMapSpec{KrausSpec{{shrink}}}, states, {0.5, 0.5}),
      MapNotTracePreservingOnRho);
}

TEST_CASE("random POVMs resolve the identity") {
  std::mt19937_64 rng(999);
  const std::vector<PsdhMatrix> povm = random_povm(4, 3, rng);
  ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
  for (const PsdhMatrix& e : povm) sum += e.matrix();
  CHECK(max_abs_entry(sum - ComplexMatrix::Identity(3, 3)) < 1e-12);
}
