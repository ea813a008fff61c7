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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "qrelent/errors.hpp"
#include "qrelent/hermitian_ops.hpp"
#include "qrelent/matrix.hpp"

namespace {

using namespace qrelent;

ComplexMatrix pauli_z() {
  ComplexMatrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  return z;
}

// Eigenvalue oracle independent of the self-adjoint solver: characteristic
// polynomial by the Faddeev-LeVerrier recurrence, roots from the companion
// matrix via a general (non-symmetric) eigensolver.
std::vector<double> charpoly_eigenvalues(const ComplexMatrix& a) {
  const Index n = a.rows();
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  ComplexMatrix mk = a;
  for (Index k = 1; k <= n; ++k) {
    if (k > 1) mk = a * (mk + c[static_cast<std::size_t>(k - 1)] * ComplexMatrix::Identity(n, n));
    c[static_cast<std::size_t>(k)] = -mk.trace().real() / static_cast<double>(k);
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Index i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(n - i)];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  REQUIRE(solver.info() == Eigen::Success);
  std::vector<double> roots(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    CHECK(std::fabs(solver.eigenvalues()(i).imag()) < 1e-7);
    roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i).real();
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

TEST_CASE("HermitianMatrix symmetrizes and records the defect") {
  ComplexMatrix m(2, 2);
  m << Complex(1.0, 0.0), Complex(0.5, 0.25), Complex(0.5, -0.25 + 1e-14), Complex(-2.0, 0.0);
  const HermitianMatrix h(m);
  CHECK(h.hermiticity_defect() > 0.0);
  CHECK(h.hermiticity_defect() < 1e-13);
  CHECK(h.matrix()(0, 1) == std::conj(h.matrix()(1, 0)));
  CHECK(h.trace() == doctest::Approx(-1.0));
}

TEST_CASE("HermitianMatrix rejects clearly non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(HermitianMatrix{m}, DomainError);
}

TEST_CASE("HermitianMatrix rejects non-square and non-finite input") {
  CHECK_THROWS_AS(HermitianMatrix{ComplexMatrix::Zero(2, 3)}, DomainError);
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(HermitianMatrix{m}, DomainError);
}

TEST_CASE("PsdhMatrix accepts psd and rejects indefinite input") {
  CHECK_NOTHROW(PsdhMatrix{ComplexMatrix::Identity(3, 3)});
  CHECK_THROWS_AS(PsdhMatrix{pauli_z()}, DomainError);
  ComplexMatrix tiny = ComplexMatrix::Identity(2, 2);
  tiny(1, 1) = -1e-18;  // within the zero clamp
  CHECK_NOTHROW(PsdhMatrix{tiny});
}

TEST_CASE("DensityMatrix requires unit trace") {
  CHECK_THROWS_AS(DensityMatrix{ComplexMatrix::Identity(2, 2)}, DomainError);
  CHECK_NOTHROW(DensityMatrix{0.5 * ComplexMatrix::Identity(2, 2)});
}

TEST_CASE("eig_hermitian returns ascending eigenvalues that reconstruct") {
  std::mt19937_64 rng(424242);
  const HermitianMatrix a = random_hermitian(5, rng);
  const SpectralDecomposition eig = eig_hermitian(a);
  for (Index i = 0; i + 1 < 5; ++i) CHECK(eig.eigenvalues(i) <= eig.eigenvalues(i + 1));
  const ComplexMatrix recon =
      eig.eigenvectors * eig.eigenvalues.asDiagonal() * eig.eigenvectors.adjoint();
  CHECK(max_abs_entry(recon - a.matrix()) < 1e-12 * std::max(1.0, a.norm_max()));
}

TEST_CASE("eigenvalues match the characteristic-polynomial oracle") {
  std::mt19937_64 rng(20260819);
  for (int rep = 0; rep < 5; ++rep) {
    const HermitianMatrix a = random_hermitian(4, rng);
    const Eigen::VectorXd w = eigenvalues_only(a);
    const std::vector<double> oracle = charpoly_eigenvalues(a.matrix());
    for (Index i = 0; i < 4; ++i) {
      CHECK(std::fabs(w(i) - oracle[static_cast<std::size_t>(i)]) <
            1e-8 * std::max(1.0, a.norm_max()));
    }
  }
}

TEST_CASE("tr_signed on a diagonal example") {
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 0.25;
  d(3, 3) = -0.5;
  const HermitianMatrix a(d);
  const SignedTrace s = tr_signed(a);
  CHECK(s.plus == doctest::Approx(3.25).epsilon(1e-14));
  CHECK(s.minus == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(trace_norm(a) == doctest::Approx(4.75).epsilon(1e-14));
}

TEST_CASE("tr_signed on Pauli Z and matrix_abs") {
  const HermitianMatrix z(pauli_z());
  const SignedTrace s = tr_signed(z);
  CHECK(s.plus == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.minus == doctest::Approx(1.0).epsilon(1e-14));
  const PsdhMatrix abs_z = matrix_abs(z);
  CHECK(max_abs_entry(abs_z.matrix() - ComplexMatrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("tr_signed invariants on random matrices") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const Index n = 2 + static_cast<Index>(rep % 5);
    const HermitianMatrix a = random_hermitian(n, rng);
    const SignedTrace s = tr_signed(a);
    const double scale = static_cast<double>(n) * std::max(1.0, a.norm_max());

    // plus - minus recovers the trace.
    CHECK(std::fabs((s.plus - s.minus) - a.trace()) < 1e-10 * scale);

    // Negation swaps the parts exactly (same eigenvalues, same clamp).
    const HermitianMatrix neg = HermitianMatrix::trusted(-a.matrix());
    const SignedTrace sn = tr_signed(neg);
    CHECK(std::fabs(sn.plus - s.minus) < 1e-12 * scale);
    CHECK(std::fabs(sn.minus - s.plus) < 1e-12 * scale);

    // Trace norm is absolutely homogeneous.
    const HermitianMatrix scaled = HermitianMatrix::trusted(-2.5 * a.matrix());
    CHECK(trace_norm(scaled) == doctest::Approx(2.5 * trace_norm(a)).epsilon(1e-10));
  }
}

TEST_CASE("trace_norm agrees with a singular-value oracle") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    const HermitianMatrix a = random_hermitian(4, rng);
    Eigen::JacobiSVD<ComplexMatrix> svd(a.matrix());
    const double oracle = svd.singularValues().sum();
    CHECK(trace_norm(a) == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("support_contained basics") {
  const PsdhMatrix full(ComplexMatrix::Identity(3, 3));
  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(0, 0) = 1.0;
  const PsdhMatrix rank1(p);
  CHECK(support_contained(rank1, full));
  CHECK(support_contained(rank1, rank1));
  CHECK(support_contained(full, full));
  CHECK_FALSE(support_contained(full, rank1));
}

TEST_CASE("support_contained under a random rotation") {
  std::mt19937_64 rng(11);
  const ComplexMatrix u = random_unitary(4, rng);
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d(0, 0) = 0.7;
  d(1, 1) = 0.3;
  const PsdhMatrix low(u * d * u.adjoint());
  ComplexMatrix d3 = d;
  d3(2, 2) = 0.5;
  const PsdhMatrix mid((u * d3 * u.adjoint()).eval());
  CHECK(support_contained(low, mid));
  CHECK_FALSE(support_contained(mid, low));
}

TEST_CASE("random_density is deterministic, normalized and rank-controlled") {
  const DensityMatrix a = random_density(4, 2, 123);
  const DensityMatrix b = random_density(4, 2, 123);
  CHECK(max_abs_entry(a.matrix() - b.matrix()) == 0.0);
  CHECK(a.psdh().trace() == doctest::Approx(1.0).epsilon(1e-14));

  const Eigen::VectorXd w = eigenvalues_only(a.hermitian());
  const double eps = zero_eig_threshold(4, a.psdh().norm_max());
  Index rank = 0;
  for (Index i = 0; i < 4; ++i) {
    if (w(i) > eps) ++rank;
  }
  CHECK(rank == 2);

  const DensityMatrix c = random_density(4, 2, 124);
  CHECK(max_abs_entry(a.matrix() - c.matrix()) > 1e-3);
}

TEST_CASE("random_unitary is unitary and deterministic per seed") {
  std::mt19937_64 rng(5);
  const ComplexMatrix u = random_unitary(5, rng);
  CHECK(max_abs_entry(u.adjoint() * u - ComplexMatrix::Identity(5, 5)) < 1e-12);
  std::mt19937_64 rng2(5);
  const ComplexMatrix v = random_unitary(5, rng2);
  CHECK(max_abs_entry(u - v) == 0.0);
}

TEST_CASE("random_traceless_hermitian is traceless with unit trace norm") {
  std::mt19937_64 rng(31);
  const HermitianMatrix a = random_traceless_hermitian(4, rng);
  CHECK(std::fabs(a.trace()) < 1e-12);
  CHECK(trace_norm(a) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero_eig_threshold scales with dimension and norm") {
  CHECK(zero_eig_threshold(2, 1.0) == doctest::Approx(2.0 * 0x1p-40));
  CHECK(zero_eig_threshold(4, 10.0) == doctest::Approx(40.0 * 0x1p-40));
  CHECK(zero_eig_threshold(4, 0.0) == 0.0);  // the zero matrix needs no clamp
}
