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

#include "qcnc/gaussian_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcnc/errors.hpp"

namespace qcnc {

namespace {

void require_open_unit(double s, const char* where) {
  if (!(s > 0.0 && s < 1.0)) {
    throw DomainError(std::string(where) + ": s must lie in (0, 1), got " +
                      std::to_string(s));
  }
}

// (nbar + 1)^s - nbar^s, evaluated through expm1 so that small s keeps its
// relative accuracy.
double power_gap(double s, double nbar) {
  if (nbar == 0.0) return 1.0;
  const double lp = std::log1p(nbar);
  const double ln = std::log(nbar);
  // (n+1)^s - n^s = n^s (e^{s (ln(n+1) - ln n)} - 1)
  return std::exp(s * ln) * std::expm1(s * (lp - ln));
}

}  // namespace

GaussianState::GaussianState(std::complex<double> alpha, double r, double phi,
                             double nbar)
    : alpha_(alpha), r_(r), phi_(phi), nbar_(nbar) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) ||
      !std::isfinite(r) || !std::isfinite(phi) || !std::isfinite(nbar)) {
    throw DomainError("GaussianState: parameters must be finite");
  }
  if (nbar < 0.0 || nbar > kMaxOccupancy) {
    throw DomainError("GaussianState: nbar must lie in [0, 1e6], got " +
                      std::to_string(nbar));
  }
  if (std::abs(r) > kMaxSqueeze) {
    throw DomainError("GaussianState: |r| must not exceed 20, got " +
                      std::to_string(r));
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (r_ < 0.0) {
    r_ = -r_;
    phi_ += std::numbers::pi;
  }
  phi_ = std::fmod(phi_, two_pi);
  if (phi_ < 0.0) phi_ += two_pi;
  if (phi_ >= two_pi) phi_ = 0.0;
}

double thermal_weight(double s, double nbar) {
  require_open_unit(s, "thermal_weight");
  if (nbar < 0.0) throw DomainError("thermal_weight: nbar must be >= 0");
  if (nbar == 0.0) return 0.0;
  return std::pow(nbar, s) / power_gap(s, nbar);
}

double stabilized_prefactor(double s, double nbar, double nbar_prime) {
  require_open_unit(s, "stabilized_prefactor");
  if (nbar < 0.0 || nbar_prime < 0.0) {
    throw DomainError("stabilized_prefactor: occupancies must be >= 0");
  }
  return 1.0 / (power_gap(s, nbar) * power_gap(1.0 - s, nbar_prime));
}

double classicality_threshold(double nbar) { return 0.5 * std::log1p(2.0 * nbar); }

double mixedness_threshold(double r) { return std::exp(r) * std::sinh(r); }

ClassicalityReport classicality(const GaussianState& state) {
  ClassicalityReport report;
  report.r_c = classicality_threshold(state.nbar());
  report.nbar_c = mixedness_threshold(state.r());
  report.is_classical = state.r() - report.r_c <= kClassicalityTolerance;
  return report;
}

}  // namespace qcnc
