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

// Command-line surface. Exit codes: 0 success, 1 validation or IO error,
// 2 numerical non-convergence, 3 property-suite failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrelent/binary_bounds.hpp"
#include "qrelent/entropy.hpp"
#include "qrelent/errors.hpp"
#include "qrelent/hermitian_ops.hpp"
#include "qrelent/matrix_io.hpp"
#include "qrelent/qre_integral.hpp"
#include "qrelent/verify.hpp"

namespace {

using nlohmann::json;
using namespace qrelent;

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot open '" + out_path + "' for writing");
  out << text << '\n';
  if (!out) throw IoError("write to '" + out_path + "' failed");
}

json quad_to_json(const QuadResult& q) {
  return {{"value", q.value},
          {"error_estimate", q.error_estimate},
          {"evaluations", q.evaluations},
          {"converged", q.converged}};
}

struct DreOptions {
  std::string rho_path;
  std::string sigma_path;
  std::string form = "both";
  std::string method = "both";
  std::string out_path;
  double rel_tol = QuadConfig{}.rel_tol;
  double abs_tol = QuadConfig{}.abs_tol;
};

int run_dre(const DreOptions& opt) {
  const PsdhMatrix rho(read_matrix(opt.rho_path));
  const PsdhMatrix sigma(read_matrix(opt.sigma_path));
  QuadConfig qcfg;
  qcfg.rel_tol = opt.rel_tol;
  qcfg.abs_tol = opt.abs_tol;

  json report;
  report["timestamp"] = timestamp();
  const bool support_ok = support_contained(rho, sigma);
  report["support_ok"] = support_ok;
  report["infinite"] = !support_ok;

  std::vector<double> finite_values;
  if (opt.method != "integral") {
    const EntropyValue d = relative_entropy_spectral(rho, sigma);
    report["spectral"] = {{"value", d.finite ? json(d.value) : json()},
                          {"infinite", !d.finite}};
    if (d.finite) finite_values.push_back(d.value);
  }
  if (opt.method != "spectral") {
    if (opt.form != "2") {
      const IntegralEntropyResult r =
          relative_entropy_integral(rho, sigma, IntegralForm::FormOne, qcfg);
      report["form_one"] = quad_to_json(r.quadrature);
      report["form_one"]["value"] = r.entropy.finite ? json(r.entropy.value) : json();
      report["form_one"]["infinite"] = !r.entropy.finite;
      if (r.entropy.finite) finite_values.push_back(r.entropy.value);
    }
    if (opt.form != "1") {
      const IntegralEntropyResult r =
          relative_entropy_integral(rho, sigma, IntegralForm::FormTwo, qcfg);
      report["form_two"] = quad_to_json(r.quadrature);
      report["form_two"]["value"] = r.entropy.finite ? json(r.entropy.value) : json();
      report["form_two"]["infinite"] = !r.entropy.finite;
      if (r.entropy.finite) finite_values.push_back(r.entropy.value);
    }
  }
  if (finite_values.size() >= 2) {
    const auto [lo, hi] = std::minmax_element(finite_values.begin(), finite_values.end());
    report["agreement_gap"] = *hi - *lo;
  } else {
    report["agreement_gap"] = json();
  }
  emit(report.dump(2), opt.out_path);
  return 0;
}

struct DerivativeOptions {
  std::string rho_path;
  std::string sigma_path;
  int m = 2;
  bool check_fd = false;
  std::optional<double> step;
  std::string out_path;
};

int run_derivative(const DerivativeOptions& opt) {
  const PsdhMatrix rho(read_matrix(opt.rho_path));
  const HermitianMatrix sigma(read_matrix(opt.sigma_path));

  const DerivativeIntegralResult r = entropy_derivative_integral(rho, sigma, opt.m);

  json report;
  report["timestamp"] = timestamp();
  report["m"] = opt.m;
  report["integral_value"] = r.value;
  report["quadrature"] = quad_to_json(r.quadrature);

  int code = 0;
  if (opt.check_fd) {
    const double h = opt.step ? *opt.step : default_fd_step(rho, sigma);
    const double fd = entropy_derivative_fd(rho, sigma, opt.m, h);
    const double converted = -fd / static_cast<double>(factorial(opt.m));
    const double gap = std::fabs(r.value - converted);
    const double rel_gap = gap / std::max(1.0, std::fabs(r.value));
    report["fd_step"] = h;
    report["fd_value"] = fd;
    report["fd_converted"] = converted;
    report["gap"] = gap;
    report["relative_gap"] = rel_gap;
    if (rel_gap > 1e-4) code = 2;
  }
  emit(report.dump(2), opt.out_path);
  return code;
}

struct VerifyOptions {
  std::string suite = "all";
  long trials = 100;
  std::uint64_t seed = 0;
  long n = 4;
  std::string out_path;
};

json suite_to_json(const SuiteResult& r) {
  json failures = json::array();
  for (const TrialFailure& f : r.failures) {
    failures.push_back({{"trial", f.trial},
                        {"seed", f.seed},
                        {"what", f.what},
                        {"inputs", json::parse(f.inputs_json)}});
  }
  return {{"suite", r.suite},
          {"trials", r.trials},
          {"worst_slack", r.worst_slack},
          {"failures", std::move(failures)}};
}

int run_verify(const VerifyOptions& opt) {
  std::vector<std::string> names;
  if (opt.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(opt.suite);
  }

  json report;
  report["timestamp"] = timestamp();
  report["seed"] = opt.seed;
  report["n"] = opt.n;
  std::size_t total_failures = 0;
  json suites = json::array();
  for (const std::string& name : names) {
    const SuiteResult r = run_suite(name, opt.trials, opt.seed, opt.n);
    total_failures += r.failures.size();
    suites.push_back(suite_to_json(r));
  }
  if (suites.size() == 1) {
    report.update(suites[0]);
  } else {
    report["suites"] = std::move(suites);
  }
  report["failures_total"] = total_failures;
  emit(report.dump(2), opt.out_path);
  return total_failures == 0 ? 0 : 3;
}

struct BoundsOptions {
  int grid_t = 21;
  int grid_q = 21;
  std::string out_path;
};

int run_bounds(const BoundsOptions& opt) {
  const std::vector<BoundsRow> rows = bounds_table(opt.grid_t, opt.grid_q);
  std::string csv = "T,q1,min_bound,explicit_bound,kim_bound,argmin_t0\n";
  for (const BoundsRow& row : rows) {
    csv += format_full(row.T) + ',' + format_full(row.q1) + ',' + format_full(row.min_bound) +
           ',' + format_full(row.explicit_bound) + ',' + format_full(row.kim_bound) + ',' +
           format_full(row.argmin_t0) + '\n';
  }
  csv.pop_back();  // emit() appends the final newline
  emit(csv, opt.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral representations of quantum relative entropy: compute, verify, report"};
  app.require_subcommand(1);

  DreOptions dre;
  CLI::App* dre_cmd = app.add_subcommand("dre", "Relative entropy of two psdh matrix files");
  dre_cmd->add_option("rho", dre.rho_path, "First state (matrix JSON)")->required();
  dre_cmd->add_option("sigma", dre.sigma_path, "Second state (matrix JSON)")->required();
  dre_cmd->add_option("--form", dre.form, "Integral form: 1, 2 or both")
      ->check(CLI::IsMember({"1", "2", "both"}));
  dre_cmd->add_option("--method", dre.method, "spectral, integral or both")
      ->check(CLI::IsMember({"spectral", "integral", "both"}));
  dre_cmd->add_option("--rel-tol", dre.rel_tol, "Quadrature relative tolerance")
      ->check(CLI::PositiveNumber);
  dre_cmd->add_option("--abs-tol", dre.abs_tol, "Quadrature absolute tolerance")
      ->check(CLI::PositiveNumber);
  dre_cmd->add_option("--out", dre.out_path, "Write the JSON report here instead of stdout");

  DerivativeOptions deriv;
  CLI::App* deriv_cmd =
      app.add_subcommand("derivative", "Directional entropy derivative -S^(m)(0)/m!");
  deriv_cmd->add_option("rho", deriv.rho_path, "Base state (matrix JSON)")->required();
  deriv_cmd->add_option("sigma", deriv.sigma_path, "Direction (matrix JSON)")->required();
  deriv_cmd->add_option("--m", deriv.m, "Derivative order (2..20)");
  deriv_cmd->add_flag("--check-fd", deriv.check_fd,
                      "Cross-check against the finite-difference oracle");
  double step_value = 0.0;
  CLI::Option* step_opt =
      deriv_cmd->add_option("--step", step_value, "Finite-difference step (default: automatic)")
          ->check(CLI::PositiveNumber);
  deriv_cmd->add_option("--out", deriv.out_path, "Write the JSON report here instead of stdout");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Seeded randomized property suites");
  verify_cmd->add_option("--suite", verify.suite, "Suite name or all")
      ->check(CLI::IsMember({"dpi", "monotonicity", "holevo", "pencil", "bounds", "all"}));
  verify_cmd->add_option("--trials", verify.trials, "Trials per suite")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "Base seed");
  verify_cmd->add_option("--n", verify.n, "State dimension")->check(CLI::Range(2L, 64L));
  verify_cmd->add_option("--out", verify.out_path, "Write the JSON report here instead of stdout");

  BoundsOptions bounds;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Lower-bound comparison table over (T, q1)");
  bounds_cmd->add_option("--grid-T", bounds.grid_t, "Grid points along T")
      ->check(CLI::Range(2, 100000));
  bounds_cmd->add_option("--grid-q", bounds.grid_q, "Grid points along q1")
      ->check(CLI::Range(2, 100000));
  bounds_cmd->add_option("--out", bounds.out_path, "Write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (dre_cmd->parsed()) return run_dre(dre);
    if (deriv_cmd->parsed()) {
      if (step_opt->count() > 0) deriv.step = step_value;
      return run_derivative(deriv);
    }
    if (verify_cmd->parsed()) return run_verify(verify);
    if (bounds_cmd->parsed()) return run_bounds(bounds);
  } catch (const QuadNotConverged& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
