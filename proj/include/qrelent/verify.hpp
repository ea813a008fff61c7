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

#ifndef QRELENT_VERIFY_HPP
#define QRELENT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qrelent/matrix.hpp"
#include "qrelent/quadrature.hpp"

namespace qrelent {

struct TrialFailure {
  long trial;          // -1 for checks that are not per-trial
  std::uint64_t seed;  // the trial's derived seed, for replay
  std::string what;
  std::string inputs_json;  // serialized inputs reproducing the failure
};

struct SuiteResult {
  std::string suite;
  long trials = 0;
  /// Most adverse inequality margin observed; positive means everything held
  /// with room to spare.
  double worst_slack = 0.0;
  std::vector<TrialFailure> failures;
};

/// Names accepted by run_suite: dpi, monotonicity, holevo, pencil, bounds.
const std::vector<std::string>& suite_names();

/// Runs one seeded randomized property suite at dimension n. Each trial
/// derives its own seed from (seed, trial index), so any failure can be
/// replayed in isolation. DomainError for unknown names or trials < 1.
SuiteResult run_suite(const std::string& name, long trials, std::uint64_t seed, Index n,
                      const QuadConfig& qcfg = {}, const Tolerances& tol = {});

}  // namespace qrelent

#endif  // QRELENT_VERIFY_HPP
