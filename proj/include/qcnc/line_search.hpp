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

#include <functional>

namespace qcnc {

struct LineSearchOptions {
  double x_tol = 1e-8;
  int max_iterations = 500;
};

struct LineSearchResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
  int iterations = 0;
  bool converged = false;
};

/// Golden-section minimization of a unimodal function on [lo, hi], followed
/// by one parabolic step through the final bracket. The parabolic point is
/// kept only if it lies inside the bracket and improves on the golden one.
LineSearchResult golden_minimize(const std::function<double(double)>& f, double lo,
                                 double hi, const LineSearchOptions& options = {});

LineSearchResult golden_maximize(const std::function<double(double)>& f, double lo,
                                 double hi, const LineSearchOptions& options = {});

/// Maximizes f on [lo, hi] by a uniform scan of `points` samples followed by
/// golden refinement between the neighbours of the best sample.
///
/// The scan must be unimodal: nondecreasing up to its peak and nonincreasing
/// after it, up to an absolute slack of `unimodal_slack`. A scan with a
/// second hump throws NumericGuardError instead of returning a local optimum.
LineSearchResult scan_then_maximize(const std::function<double(double)>& f, double lo,
                                    double hi, int points,
                                    const LineSearchOptions& options = {},
                                    double unimodal_slack = 1e-13);

}  // namespace qcnc
