// Copyright 2026 The qcnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcnc/gaussian_state.hpp"

namespace qcnc {

/// Two states and an exponent drawn from the standard oracle box:
/// nbar <= 1.5, r <= 1.2, |alpha| <= 1, s in [0.1, 0.9].
struct RandomPair {
  GaussianState a;
  GaussianState b;
  double s = 0.5;
};

std::vector<RandomPair> draw_oracle_pairs(std::uint64_t seed, int count);

struct VerifyConfig {
  std::uint64_t seed = 42;
  int draws = 100;
  double tol = 1e-6;       // oracle agreement and multiplicativity
  double dim_tol = 1e-9;   // trace defect used to size the Fock space
  int boundary_samples = 200;
};

struct SuiteReport {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // worst residual, or most negative slack for bound suites
  int checks = 0;
  std::string detail;
};

/// Oracle agreement, bound chains, convexity, multiplicativity, invariance
/// and boundary-assumption suites, in that order.
std::vector<SuiteReport> run_verification(const VerifyConfig& config);

}  // namespace qcnc
