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

#include "qrelent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qrelent/binary_bounds.hpp"
#include "qrelent/channels.hpp"
#include "qrelent/entropy.hpp"
#include "qrelent/errors.hpp"
#include "qrelent/hermitian_ops.hpp"
#include "qrelent/matrix_io.hpp"
#include "qrelent/pencil.hpp"

namespace qrelent {

namespace {

std::uint64_t trial_seed(std::uint64_t base, long t) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(t) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

DensityMatrix random_density_from(std::mt19937_64& rng, Index n, const Tolerances& tol) {
  const ComplexMatrix g = ginibre(n, n, rng);
  const ComplexMatrix w = g * g.adjoint();
  return DensityMatrix(ComplexMatrix(w / w.trace().real()), tol);
}

// Map rotation used by the dpi and monotonicity suites. Index selects among
// the non-completely-positive transpose, a random measurement, their
// composition, a unitary Kraus map, a two-block pinching, and (even n) the
// partial trace over a qubit factor.
PositiveMapSpec rotation_map(long idx, Index n, std::mt19937_64& rng, const Tolerances& tol) {
  const long variants = n % 2 == 0 ? 6 : 5;
  switch (idx % variants) {
    case 0:
      return TransposeSpec{};
    case 1:
      return MeasurementSpec{random_povm(3, n, rng, tol)};
    case 2: {
      ComposeSpec c;
      c.maps.push_back(TransposeSpec{});
      c.maps.push_back(MeasurementSpec{random_povm(3, n, rng, tol)});
      return c;
    }
    case 3:
      return KrausSpec{{random_unitary(n, rng)}};
    case 4: {
      const ComplexMatrix u = random_unitary(n, rng);
      const Index k = n / 2 > 0 ? n / 2 : 1;
      const ComplexMatrix head = u.leftCols(k);
      PinchingSpec p;
      p.projectors.push_back(PsdhMatrix(ComplexMatrix(head * head.adjoint()), tol));
      p.projectors.push_back(PsdhMatrix(
          ComplexMatrix(ComplexMatrix::Identity(n, n) - head * head.adjoint()), tol));
      return p;
    }
    default:
      return PartialTraceSpec{2, n / 2, TracedSide::B};
  }
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> uni(0.05, 1.0);
  std::vector<double> w(count);
  double sum = 0.0;
  for (double& x : w) {
    x = uni(rng);
    sum += x;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    w[i] /= sum;
    acc += w[i];
  }
  w.back() = 1.0 - acc;  // exact unit sum
  return w;
}

struct SuiteContext {
  SuiteResult result;
  double worst = std::numeric_limits<double>::infinity();

  void margin(double m) { worst = std::min(worst, m); }
  void check(bool ok, long trial, std::uint64_t seed, const std::string& what,
             const nlohmann::json& inputs) {
    if (!ok) result.failures.push_back({trial, seed, what, inputs.dump()});
  }
  SuiteResult finish(long trials) {
    result.trials = trials;
    result.worst_slack = worst;
    return result;
  }
};

double classical_mutual_information(const std::vector<DensityMatrix>& states,
                                    const std::vector<double>& weights,
                                    const std::vector<PsdhMatrix>& povm) {
  const std::size_t l = states.size();
  const std::size_t k = povm.size();
  std::vector<double> joint(l * k);
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const double p = (povm[i].matrix() * states[j].matrix()).trace().real();
      joint[j * k + i] = weights[j] * std::max(0.0, p);
    }
  }
  std::vector<double> p_out(k, 0.0);
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t i = 0; i < k; ++i) p_out[i] += joint[j * k + i];
  }
  double info = 0.0;
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const double p = joint[j * k + i];
      if (p > 0.0) info += p * std::log(p / (weights[j] * p_out[i]));
    }
  }
  return info;
}

SuiteResult run_dpi(long trials, std::uint64_t seed, Index n, const Tolerances& tol) {
  SuiteContext ctx;
  ctx.result.suite = "dpi";
  const std::vector<double> grid = {-1.0, 0.5, 2.0};
  for (long t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    std::mt19937_64 rng(s);
    const DensityMatrix rho = random_density_from(rng, n, tol);
    const DensityMatrix sigma = random_density_from(rng, n, tol);
    const PositiveMapSpec map = rotation_map(t, n, rng, tol);
    try {
      const DpiReport rep = dpi_check(map, rho, sigma, grid, DpiRoute::Spectral, {}, tol);
      if (rep.lhs.finite && rep.rhs.finite) ctx.margin(rep.slack);
      ctx.check(rep.satisfied, t, s, "relative entropy increased under the map",
                {{"rho", matrix_to_json(rho.matrix())},
                 {"sigma", matrix_to_json(sigma.matrix())},
                 {"map", map_spec_to_json(map)}});
    } catch (const Error& e) {
      ctx.check(false, t, s, e.what(),
                {{"rho", matrix_to_json(rho.matrix())},
                 {"sigma", matrix_to_json(sigma.matrix())},
                 {"map", map_spec_to_json(map)}});
    }
  }
  return ctx.finish(trials);
}

SuiteResult run_monotonicity(long trials, std::uint64_t seed, Index n, const Tolerances& tol) {
  SuiteContext ctx;
  ctx.result.suite = "monotonicity";
  for (long t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    std::mt19937_64 rng(s);
    const HermitianMatrix a = random_hermitian(n, rng);
    const PositiveMapSpec map = rotation_map(t, n, rng, tol);
    try {
      const TrMonotonicityReport rep = tr_monotonicity_check(map, a, tol);
      ctx.margin(std::min(rep.plus_defect, rep.minus_defect));
      ctx.check(rep.ok, t, s, "signed trace grew under the map",
                {{"a", matrix_to_json(a.matrix())}, {"map", map_spec_to_json(map)}});
    } catch (const Error& e) {
      ctx.check(false, t, s, e.what(),
                {{"a", matrix_to_json(a.matrix())}, {"map", map_spec_to_json(map)}});
    }
  }
  return ctx.finish(trials);
}

SuiteResult run_holevo(long trials, std::uint64_t seed, Index n, const Tolerances& tol) {
  SuiteContext ctx;
  ctx.result.suite = "holevo";
  const std::vector<double> grid = {-1.0, 0.5, 2.0};
  for (long t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    std::mt19937_64 rng(s);
    const std::size_t l = 2 + static_cast<std::size_t>(t % 3);
    std::vector<DensityMatrix> states;
    for (std::size_t j = 0; j < l; ++j) states.push_back(random_density_from(rng, n, tol));
    const std::vector<double> weights = random_weights(rng, l);
    const std::vector<PsdhMatrix> povm = random_povm(3, n, rng, tol);
    const PositiveMapSpec map = MeasurementSpec{povm};

    nlohmann::json inputs;
    inputs["weights"] = weights;
    inputs["map"] = map_spec_to_json(map);
    for (const auto& st : states) inputs["states"].push_back(matrix_to_json(st.matrix()));

    try {
      const DpiReport rep = holevo_dpi_check(map, states, weights, grid, tol);
      ctx.margin(rep.slack);
      ctx.check(rep.satisfied, t, s, "Holevo quantity increased under the measurement", inputs);

      const double mi = classical_mutual_information(states, weights, povm);
      const double gap = std::fabs(rep.lhs.value - mi);
      ctx.margin(1e-10 - gap);
      ctx.check(gap <= 1e-10, t, s, "measured Holevo quantity deviates from mutual information",
                inputs);
    } catch (const Error& e) {
      ctx.check(false, t, s, e.what(), inputs);
    }
  }
  return ctx.finish(trials);
}

SuiteResult run_pencil(long trials, std::uint64_t seed, Index n, const Tolerances& tol) {
  SuiteContext ctx;
  ctx.result.suite = "pencil";
  for (long t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    std::mt19937_64 rng(s);
    const DensityMatrix rho = random_density_from(rng, n, tol);
    const DensityMatrix sigma = random_density_from(rng, n, tol);
    nlohmann::json inputs = {{"rho", matrix_to_json(rho.matrix())},
                             {"sigma", matrix_to_json(sigma.matrix())}};
    try {
      const Pencil p = Pencil::affine(rho.psdh(), sigma.psdh());
      const PositivityWindow w = p.positivity_window(tol);

      const double lo = std::max(w.t_lo, -10.0);
      const double hi = std::min(w.t_hi, 10.0);
      for (int i = 1; i <= 5; ++i) {
        const double ti = lo + (hi - lo) * i / 6.0;
        const double neg = p.tr_neg_at(ti, tol);
        ctx.margin(-neg);
        ctx.check(neg == 0.0, t, s, "negative mass inside the positivity window", inputs);
      }

      std::uniform_real_distribution<double> uni(-5.0, 5.0);
      double t1 = uni(rng), t2 = uni(rng), t3 = uni(rng);
      if (t1 > t2) std::swap(t1, t2);
      if (t2 > t3) std::swap(t2, t3);
      if (t1 > t2) std::swap(t1, t2);
      if (t3 - t1 > 1e-6) {
        const double chord = ((t3 - t2) * p.tr_neg_at(t1, tol) + (t2 - t1) * p.tr_neg_at(t3, tol)) /
                             (t3 - t1);
        const double margin = chord - p.tr_neg_at(t2, tol) + 1e-9;
        ctx.margin(margin);
        ctx.check(margin >= 0.0, t, s, "negative mass violated convexity", inputs);
      }

      const double gap = rho.hermitian().trace() - sigma.hermitian().trace();
      for (double ti : {-0.5, -1.5, -3.0}) {
        const double identity_gap = std::fabs(
            p.tr_pos_deficit_at(ti, tol) - (p.tr_neg_at(ti, tol) + std::fabs(ti) * gap));
        ctx.margin(1e-10 - identity_gap);
        ctx.check(identity_gap <= 1e-10, t, s,
                  "affine deficit identity failed on the negative half-line", inputs);
      }

      const HermitianMatrix dir = random_traceless_hermitian(n, rng, tol);
      const Pencil ray = Pencil::ray(rho.psdh(), dir, tol);
      double prev = ray.tr_neg_at(0.0, tol);
      for (int i = 1; i <= 8; ++i) {
        const double cur = ray.tr_neg_at(0.625 * i, tol);
        ctx.margin(cur - prev + 1e-10);
        ctx.check(cur >= prev - 1e-10, t, s, "negative mass not monotone on the right ray",
                  inputs);
        prev = cur;
      }
      prev = ray.tr_neg_at(0.0, tol);
      for (int i = 1; i <= 8; ++i) {
        const double cur = ray.tr_neg_at(-0.625 * i, tol);
        ctx.margin(cur - prev + 1e-10);
        ctx.check(cur >= prev - 1e-10, t, s, "negative mass not monotone on the left ray",
                  inputs);
        prev = cur;
      }
    } catch (const Error& e) {
      ctx.check(false, t, s, e.what(), inputs);
    }
  }
  return ctx.finish(trials);
}

SuiteResult run_bounds(long trials, std::uint64_t seed, Index n, const Tolerances& tol) {
  SuiteContext ctx;
  ctx.result.suite = "bounds";

  // Deterministic part: bound ordering over the grid.
  for (const BoundsRow& row : bounds_table(21, 21)) {
    const double gap1 = row.min_bound - row.explicit_bound;
    const double gap2 = row.explicit_bound - row.kim_bound;
    ctx.margin(gap1 + 1e-10);
    ctx.margin(gap2 + 1e-10);
    ctx.check(gap1 >= -1e-10 && gap2 >= -1e-10, -1, seed,
              "bound ordering violated on the (T, q1) grid",
              {{"T", row.T}, {"q1", row.q1}});
  }

  for (long t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    std::mt19937_64 rng(s);
    const DensityMatrix rho0 = random_density_from(rng, n, tol);
    const DensityMatrix rho1 = random_density_from(rng, n, tol);
    const std::vector<double> q = random_weights(rng, 2);
    nlohmann::json inputs = {{"rho0", matrix_to_json(rho0.matrix())},
                             {"rho1", matrix_to_json(rho1.matrix())},
                             {"weights", q}};
    try {
      const BinaryReduction red = distinguishing_measurement(rho0, rho1, tol);
      const double preservation = std::fabs(2.0 * (red.t1 - red.t0) - red.trace_distance);
      ctx.margin(1e-12 - preservation);
      ctx.check(preservation <= 1e-12, t, s, "reduction changed the trace distance", inputs);

      auto binary = [&tol](double x) {
        ComplexMatrix m = ComplexMatrix::Zero(2, 2);
        m(0, 0) = x;
        m(1, 1) = 1.0 - x;
        return PsdhMatrix(m, tol);
      };
      const EntropyValue d_full = relative_entropy_spectral(rho0.psdh(), rho1.psdh(), tol);
      const EntropyValue d_bin =
          relative_entropy_spectral(binary(red.t0), binary(red.t1), tol);
      if (d_full.finite && d_bin.finite) {
        ctx.margin(d_full.value - d_bin.value + 1e-8);
        ctx.check(d_bin.value <= d_full.value + 1e-8, t, s,
                  "relative entropy grew under the binary reduction", inputs);
      } else {
        ctx.check(!d_full.finite, t, s, "binary reduction made a finite divergence infinite",
                  inputs);
      }

      const double chi_full =
          holevo_chi({rho0.psdh(), rho1.psdh()}, q, tol);
      const double chi_bin = mutual_info_binary(red.t0, red.t1, q[0], q[1]);
      ctx.margin(chi_full - chi_bin + 1e-8);
      ctx.check(chi_bin <= chi_full + 1e-8, t, s,
                "Holevo quantity grew under the binary reduction", inputs);

      const ChiMinResult lower = chi_lower_bound_min(red.trace_distance, q[0], q[1]);
      ctx.margin(chi_full - lower.minimum + 1e-8);
      ctx.check(chi_full >= lower.minimum - 1e-8, t, s,
                "Holevo quantity fell below the tight lower bound", inputs);
    } catch (const Error& e) {
      ctx.check(false, t, s, e.what(), inputs);
    }
  }
  return ctx.finish(trials);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dpi", "monotonicity", "holevo", "pencil",
                                                 "bounds"};
  return names;
}

SuiteResult run_suite(const std::string& name, long trials, std::uint64_t seed, Index n,
                      const QuadConfig& qcfg, const Tolerances& tol) {
  (void)qcfg;
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (n < 2) throw DomainError("suites need dimension >= 2");
  if (name == "dpi") return run_dpi(trials, seed, n, tol);
  if (name == "monotonicity") return run_monotonicity(trials, seed, n, tol);
  if (name == "holevo") return run_holevo(trials, seed, n, tol);
  if (name == "pencil") return run_pencil(trials, seed, n, tol);
  if (name == "bounds") return run_bounds(trials, seed, n, tol);
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace qrelent
