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

#include "qrelent/qre_integral.hpp"

#include <cmath>
#include <limits>

#include "qrelent/errors.hpp"
#include "qrelent/hermitian_ops.hpp"
#include "qrelent/pencil.hpp"

namespace qrelent {

namespace {

// Orthonormal basis (as columns) of the support of a psdh matrix.
ComplexMatrix support_basis(const PsdhMatrix& m, const Tolerances& tol) {
  const SpectralDecomposition sd = eig_hermitian(m.hermitian(), tol);
  const double eps = zero_eig_threshold(m.dim(), m.norm_max(), tol);
  Index rank = 0;
  for (Index i = 0; i < sd.eigenvalues.size(); ++i) {
    if (sd.eigenvalues(i) > eps) ++rank;
  }
  return sd.eigenvectors.rightCols(rank);  // eigenvalues ascend
}

QuadResult combine(const QuadResult& a, const QuadResult& b) {
  QuadResult out;
  out.value = a.value + b.value;
  out.error_estimate = a.error_estimate + b.error_estimate;
  out.evaluations = a.evaluations + b.evaluations;
  out.converged = a.converged && b.converged;
  return out;
}

double entropy_of_eigenvalues(const HermitianMatrix& a, const Tolerances& tol) {
  const Eigen::VectorXd ev = eigenvalues_only(a);
  const double eps = zero_eig_threshold(a.dim(), a.norm_max(), tol);
  double s = 0.0;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > eps) s -= ev(i) * std::log(ev(i));
  }
  return s;
}

long long binomial(int m, int j) { return factorial(m) / (factorial(j) * factorial(m - j)); }

}  // namespace

long long factorial(int m) {
  if (m < 0 || m > 20) throw DomainError("factorial defined here for 0 <= m <= 20 only");
  long long out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

IntegralEntropyResult relative_entropy_integral(const PsdhMatrix& rho, const PsdhMatrix& sigma,
                                                IntegralForm form, const QuadConfig& qcfg,
                                                const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("relative entropy needs equal dimensions");
  }
  if (!support_contained(rho, sigma, tol)) {
    return {EntropyValue::infinite(), QuadResult{}};
  }

  // Restrict to the support of sigma; the pencil is positive definite at
  // t = 1 there, so the weight singularity at 1 sits strictly inside the
  // positivity window.
  PsdhMatrix r = rho;
  PsdhMatrix s = sigma;
  const ComplexMatrix basis = support_basis(sigma, tol);
  if (basis.cols() == 0) return {EntropyValue::of(0.0), QuadResult{}};
  if (basis.cols() < sigma.dim()) {
    r = PsdhMatrix(ComplexMatrix(basis.adjoint() * rho.matrix() * basis), tol);
    s = PsdhMatrix(ComplexMatrix(basis.adjoint() * sigma.matrix() * basis), tol);
  }

  const double trace_gap = r.trace() - s.trace();
  const Pencil pencil = Pencil::affine(r, s);
  const PositivityWindow w = pencil.positivity_window(tol);

  if (form == IntegralForm::FormOne) {
    auto f = [&](double t) {
      if (t > w.t_lo && t < w.t_hi) return 0.0;
      const double neg = pencil.tr_neg_at(t, tol);
      if (neg == 0.0) return 0.0;
      const double tm1 = t - 1.0;
      return neg / (std::fabs(t) * tm1 * tm1);
    };
    std::vector<double> pts = {0.0, 1.0};
    if (std::isfinite(w.t_lo) && w.t_lo < 0.0) pts.push_back(w.t_lo);
    if (std::isfinite(w.t_hi)) pts.push_back(w.t_hi);
    const double inf = std::numeric_limits<double>::infinity();
    const QuadResult q = integrate(f, -inf, inf, pts, qcfg);
    if (!q.converged) {
      throw QuadNotConverged("relative entropy integral did not converge", q);
    }
    return {EntropyValue::of(trace_gap + q.value), q};
  }

  // FormTwo. On the negative half-line, strictly inside the window the
  // deficit tr+ A(t) - tr rho equals |t| (tr rho - tr sigma) exactly (the
  // negative mass vanishes there), so no eigensolve is needed.
  auto f_neg = [&](double t) {
    const double tm1 = t - 1.0;
    if (t > w.t_lo) return trace_gap / (tm1 * tm1);
    const double deficit = tr_signed(pencil.eval(t), tol).plus - r.trace();
    if (deficit == 0.0) return 0.0;
    return deficit / (std::fabs(t) * tm1 * tm1);
  };
  auto f_pos = [&](double t) {
    if (t < w.t_hi) return 0.0;
    const double neg = pencil.tr_neg_at(t, tol);
    if (neg == 0.0) return 0.0;
    const double tm1 = t - 1.0;
    return neg / (t * tm1 * tm1);
  };

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> pts_neg;
  if (std::isfinite(w.t_lo) && w.t_lo < 0.0) pts_neg.push_back(w.t_lo);
  std::vector<double> pts_pos;
  if (std::isfinite(w.t_hi)) pts_pos.push_back(w.t_hi);

  const QuadResult q_neg = integrate(f_neg, -inf, 0.0, pts_neg, qcfg);
  const QuadResult q_pos = integrate(f_pos, 0.0, inf, pts_pos, qcfg);
  const QuadResult q = combine(q_neg, q_pos);
  if (!q.converged) {
    throw QuadNotConverged("relative entropy integral did not converge", q);
  }
  return {EntropyValue::of(q.value), q};
}

DerivativeIntegralResult entropy_derivative_integral(const PsdhMatrix& rho,
                                                     const HermitianMatrix& sigma, int m,
                                                     const QuadConfig& qcfg,
                                                     const Tolerances& tol) {
  if (m < 2) throw DomainError("derivative order must be at least 2");
  if (m > 20) throw DomainError("m exceeds 20");
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("derivative direction has mismatched dimension");
  }
  QuadResult trivial;
  trivial.converged = true;
  if (sigma.norm_max() == 0.0) return {0.0, trivial};
  if (!support_contained(matrix_abs(sigma, tol), rho, tol)) {
    throw SupportViolation("direction acts outside the support of the base state");
  }

  // Restrict to the support of rho so the base point is positive definite
  // and the positivity window has strictly positive radius.
  PsdhMatrix r = rho;
  HermitianMatrix s = sigma;
  const ComplexMatrix basis = support_basis(rho, tol);
  if (basis.cols() == 0) return {0.0, trivial};
  if (basis.cols() < rho.dim()) {
    r = PsdhMatrix(ComplexMatrix(basis.adjoint() * rho.matrix() * basis), tol);
    s = HermitianMatrix(ComplexMatrix(basis.adjoint() * sigma.matrix() * basis), tol);
  }

  const Pencil ray = Pencil::ray(r, s, tol);
  const PositivityWindow w = ray.positivity_window(tol);

  auto f = [&](double t) {
    const double neg = ray.tr_neg_at(t, tol);
    if (neg == 0.0) return 0.0;
    return neg / (std::fabs(t) * std::pow(t, static_cast<double>(m)));
  };

  const double inf = std::numeric_limits<double>::infinity();
  QuadResult q_neg = trivial;
  QuadResult q_pos = trivial;
  if (std::isfinite(w.t_lo)) q_neg = integrate(f, -inf, w.t_lo, {}, qcfg);
  if (std::isfinite(w.t_hi)) q_pos = integrate(f, w.t_hi, inf, {}, qcfg);

  const QuadResult q = combine(q_neg, q_pos);
  if (!q.converged) {
    throw QuadNotConverged("entropy derivative integral did not converge", q);
  }
  return {q.value, q};
}

double entropy_derivative_fd(const PsdhMatrix& rho, const HermitianMatrix& sigma, int m,
                             double step, const Tolerances& tol) {
  if (m < 2) throw DomainError("derivative order must be at least 2");
  if (m > 20) throw DomainError("m exceeds 20");
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("derivative direction has mismatched dimension");
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("step must be positive");
  if (sigma.norm_max() == 0.0) return 0.0;
  if (!support_contained(matrix_abs(sigma, tol), rho, tol)) {
    throw SupportViolation("direction acts outside the support of the base state");
  }

  const Pencil ray = Pencil::ray(rho, sigma, tol);
  const PositivityWindow w = ray.positivity_window(tol);
  const double radius = std::min(-w.t_lo, w.t_hi);
  const double reach = 0.5 * m * step;
  if (!(reach <= radius * (1.0 - 1e-9))) {
    throw StencilOutOfWindow("stencil of half-width " + std::to_string(reach) +
                             " leaves the positivity window");
  }

  auto entropy_at = [&](double t) { return entropy_of_eigenvalues(ray.eval(t), tol); };

  // m-th central difference at 0 (half-integer offsets when m is odd),
  // normalized by h^m.
  auto diff = [&](double h) {
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double coeff = (j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(m, j));
      acc += coeff * entropy_at((0.5 * m - j) * h);
    }
    return acc / std::pow(h, static_cast<double>(m));
  };

  const double coarse = diff(step);
  const double fine = diff(0.5 * step);
  return (4.0 * fine - coarse) / 3.0;  // leading h^2 error term eliminated
}

double default_fd_step(const PsdhMatrix& rho, const HermitianMatrix& sigma,
                       const Tolerances& tol) {
  if (sigma.norm_max() == 0.0) return 2e-3;
  if (!support_contained(matrix_abs(sigma, tol), rho, tol)) {
    throw SupportViolation("direction acts outside the support of the base state");
  }
  const Pencil ray = Pencil::ray(rho, sigma, tol);
  const PositivityWindow w = ray.positivity_window(tol);
  // When the window binds, relative truncation of the extrapolated stencil is
  // a constant multiple of (step / radius)^4; 0.05 keeps it near 1e-6 while
  // the cap keeps cancellation below that for well-conditioned pencils.
  return std::min(2e-3, 0.05 * std::min(-w.t_lo, w.t_hi));
}

}  // namespace qrelent
