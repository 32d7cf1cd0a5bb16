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

namespace qcnc {

inline constexpr double kClassicalityTolerance = 1e-12;
inline constexpr double kMaxSqueeze = 20.0;
inline constexpr double kMaxOccupancy = 1e6;

/// One-mode Gaussian state written as a displaced squeezed thermal state
///   rho = D(alpha) S(r, phi) rho_T(nbar) S^dag(r, phi) D^dag(alpha)
/// with S(r, phi) = exp{r/2 [e^{i phi} a^dag^2 - e^{-i phi} a^2]}.
///
/// The constructor canonicalizes r >= 0 (a negative squeeze factor is the
/// same operator with phi shifted by pi) and wraps phi into [0, 2 pi).
class GaussianState {
 public:
  GaussianState() = default;
  GaussianState(std::complex<double> alpha, double r, double phi, double nbar);

  static GaussianState thermal(double nbar) { return {0.0, 0.0, 0.0, nbar}; }
  static GaussianState coherent(std::complex<double> alpha) {
    return {alpha, 0.0, 0.0, 0.0};
  }
  static GaussianState squeezed_thermal(double r, double nbar, double phi = 0.0) {
    return {0.0, r, phi, nbar};
  }

  std::complex<double> alpha() const noexcept { return alpha_; }
  double alpha_re() const noexcept { return alpha_.real(); }
  double alpha_im() const noexcept { return alpha_.imag(); }
  double r() const noexcept { return r_; }
  double phi() const noexcept { return phi_; }
  double nbar() const noexcept { return nbar_; }
  bool is_pure() const noexcept { return nbar_ == 0.0; }

  GaussianState displaced(std::complex<double> delta) const {
    return {alpha_ + delta, r_, phi_, nbar_};
  }
  /// Image under the phase rotation exp(-i theta a^dag a):
  /// alpha -> alpha e^{i theta}, phi -> phi + 2 theta.
  GaussianState rotated(double theta) const {
    return {alpha_ * std::polar(1.0, theta), r_, phi_ + 2.0 * theta, nbar_};
  }

  friend bool operator==(const GaussianState&, const GaussianState&) = default;

 private:
  std::complex<double> alpha_{0.0, 0.0};
  double r_ = 0.0;
  double phi_ = 0.0;
  double nbar_ = 0.0;
};

struct ClassicalityReport {
  double r_c = 0.0;     // 1/2 ln(2 nbar + 1)
  double nbar_c = 0.0;  // e^r sinh r
  bool is_classical = true;
};

/// f(s, nbar) = nbar^s / ((nbar + 1)^s - nbar^s), the thermal weight of the
/// Weyl expansion of rho_T^s. Throws DomainError unless 0 < s < 1.
double thermal_weight(double s, double nbar);

/// 1 / [((nbar+1)^s - nbar^s) ((nbar'+1)^{1-s} - nbar'^{1-s})].
///
/// Equal to f(s, nbar) f(1-s, nbar') / (nbar^s nbar'^{1-s}) whenever both
/// occupancies are positive, and finite when either vanishes.
double stabilized_prefactor(double s, double nbar, double nbar_prime);

double classicality_threshold(double nbar);
double mixedness_threshold(double r);
/// Occupancy of the boundary classical state with squeeze r: e^r sinh r.
inline double boundary_occupancy(double r) { return mixedness_threshold(r); }

ClassicalityReport classicality(const GaussianState& state);

}  // namespace qcnc
