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

#include <complex>

#include "qcnc/gaussian_state.hpp"

namespace qcnc {

inline constexpr double kDiscriminantFloor = 1e-300;
inline constexpr double kSEndpoint = 1e-9;

/// Quantities entering the closed-form Renyi overlap of two DSTS.
struct OverlapIntermediates {
  double K = 0.0;
  std::complex<double> L;
  std::complex<double> M;  // alpha' - alpha
  double prefactor = 0.0;
  double discriminant = 0.0;  // K^2 - |L|^2
};

struct ChernoffResult {
  double q = 1.0;
  double s_star = 0.5;
  int evaluations = 0;
  bool pure_branch = false;
};

enum class SEndpoint { Zero, One };

OverlapIntermediates overlap_intermediates(const GaussianState& a, const GaussianState& b,
                                           double s);

/// Q_s(a, b) = Tr(a^s b^{1-s}) for 0 < s < 1, from the Gaussian closed form.
/// Throws NumericGuardError if K^2 - |L|^2 leaves the representable range.
double renyi_overlap(const GaussianState& a, const GaussianState& b, double s);

/// lim Q_s as s -> 0 (requires `a` pure) or s -> 1 (requires `b` pure).
/// Both limits equal Tr(a b).
double renyi_overlap_limit(const GaussianState& a, const GaussianState& b,
                           SEndpoint endpoint);

/// Q_s between a squeezed thermal state (r, nbar) and the classical state on
/// the threshold with squeeze r' (nbar' = e^{r'} sinh r', equal alpha and phi).
double reduced_overlap(double s, double r_prime, double r, double nbar);

/// Q(a, b) = min over s in [0, 1] of Q_s(a, b).
ChernoffResult chernoff_overlap(const GaussianState& a, const GaussianState& b);

}  // namespace qcnc
