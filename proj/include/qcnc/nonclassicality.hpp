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
#include <span>
#include <vector>

#include "qcnc/gaussian_state.hpp"

namespace qcnc {

struct SaddleOptions {
  double x_tol = 1e-8;        // in s and r'
  double value_tol = 1e-10;   // in Q
  int max_iterations = 500;   // per line search
  int coarse_points = 64;     // r' pre-scan
};

/// Saddle point of the boundary-restricted overlap Q_G(s, r').
struct SaddleResult {
  double s_tilde = 0.5;
  double r_prime_tilde = 0.0;
  double q_tilde = 1.0;
  double degree = 0.0;             // 1 - q_tilde
  double order_agreement = 0.0;    // |min_s max_r' - max_r' min_s|
  int iterations = 0;
  bool converged = true;
  bool r_prime_exceeds_r = false;  // r~' > r was found (never expected)
};

struct BuresResult {
  double f_tilde = 1.0;   // max fidelity to the classical Gaussian set
  double degree_b = 0.0;  // 1 - sqrt(f_tilde)
};

/// Best r' at fixed s and the corresponding value of Q_G.
struct InnerOptimum {
  double r_prime = 0.0;
  double q = 0.0;
  int evaluations = 0;
  bool extended = false;  // bracket was widened from [0, r] to [0, r + 1]
};

InnerOptimum max_over_boundary(double s, double r, double nbar,
                               const SaddleOptions& options = {});

/// min over s of max over r' of Q_G (the primary order).
SaddleResult min_max_saddle(double r, double nbar, const SaddleOptions& options = {});

/// max over r' of min over s of Q_G. Returns {q, s, r'} in a SaddleResult.
SaddleResult max_min_saddle(double r, double nbar, const SaddleOptions& options = {});

/// Chernoff degree of nonclassicality over the classical Gaussian states.
///
/// Classical inputs short-circuit to degree 0 with the state itself as the
/// closest classical state (r~' = r, s~ = 1/2). Pure nonclassical inputs use
/// the analytic solution s~ = 0, r~' = 0, Q~ = sech r. Mixed nonclassical
/// inputs solve both optimization orders and report their disagreement.
/// Throws ConvergenceError if a line search exhausts its iteration cap.
SaddleResult chernoff_degree(const GaussianState& state, const SaddleOptions& options = {});

/// Bures degree from the analytic maximal fidelity sech(r - r_c).
BuresResult bures_degree(const GaussianState& state);

/// chernoff_degree of the squeezed thermal states (r, nbar_i); every nbar_i
/// must lie in [0, e^r sinh r).
std::vector<SaddleResult> threshold_diagnostics(double r, std::span<const double> nbar_grid,
                                                const SaddleOptions& options = {});

struct BoundaryAudit {
  int samples = 0;
  double worst_excess = 0.0;  // max over samples of Q(rho, sigma) - Q~
  GaussianState worst_state;
  bool passed = true;
};

/// Samples classical Gaussian states strictly inside the classical set and
/// checks that none has a larger Chernoff overlap with `state` than the
/// boundary optimum `saddle.q_tilde` (up to `slack`).
BoundaryAudit audit_boundary_assumption(const GaussianState& state,
                                        const SaddleResult& saddle, int samples,
                                        std::uint64_t seed, double slack = 1e-8);

}  // namespace qcnc
