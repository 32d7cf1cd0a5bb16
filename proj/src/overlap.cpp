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

#include "qcnc/overlap.hpp"

#include <cmath>
#include <sstream>

#include "qcnc/errors.hpp"
#include "qcnc/line_search.hpp"

namespace qcnc {

namespace {

// wa, wb are the Gaussian widths f + 1/2 of the two Weyl weight functions.
OverlapIntermediates intermediates_from_weights(const GaussianState& a,
                                                const GaussianState& b, double wa,
                                                double wb, double prefactor) {
  OverlapIntermediates out;
  const double ca = std::cosh(2.0 * a.r());
  const double sa = std::sinh(2.0 * a.r());
  const double cb = std::cosh(2.0 * b.r());
  const double sb = std::sinh(2.0 * b.r());
  out.K = wa * ca + wb * cb;
  out.L = wa * std::polar(sa, a.phi()) + wb * std::polar(sb, b.phi());
  out.M = b.alpha() - a.alpha();
  out.prefactor = prefactor;
  // K^2 - |L|^2 without cancellation:
  //   wa^2 + wb^2 + 2 wa wb [cosh(2ra - 2rb) + 2 sinh 2ra sinh 2rb sin^2(dphi/2)]
  const double half_dphi = 0.5 * (a.phi() - b.phi());
  const double sin_half = std::sin(half_dphi);
  const double cross =
      std::cosh(2.0 * (a.r() - b.r())) + 2.0 * sa * sb * sin_half * sin_half;
  out.discriminant = wa * wa + wb * wb + 2.0 * wa * wb * cross;
  return out;
}

double overlap_value(const OverlapIntermediates& in) {
  if (!(in.discriminant > kDiscriminantFloor) || !std::isfinite(in.discriminant)) {
    std::ostringstream msg;
    msg << "renyi_overlap: discriminant K^2 - |L|^2 = " << in.discriminant
        << " out of range (K=" << in.K << ", |L|=" << std::abs(in.L) << ")";
    throw NumericGuardError(msg.str());
  }
  const double m2 = std::norm(in.M);
  const double l_m2 = (std::conj(in.L) * in.M * in.M).real();
  const double exponent = -(in.K * m2 - l_m2) / in.discriminant;
  return in.prefactor / std::sqrt(in.discriminant) * std::exp(exponent);
}

}  // namespace

OverlapIntermediates overlap_intermediates(const GaussianState& a, const GaussianState& b,
                                           double s) {
  const double wa = thermal_weight(s, a.nbar()) + 0.5;
  const double wb = thermal_weight(1.0 - s, b.nbar()) + 0.5;
  return intermediates_from_weights(a, b, wa, wb,
                                    stabilized_prefactor(s, a.nbar(), b.nbar()));
}

double renyi_overlap(const GaussianState& a, const GaussianState& b, double s) {
  return overlap_value(overlap_intermediates(a, b, s));
}

double renyi_overlap_limit(const GaussianState& a, const GaussianState& b,
                           SEndpoint endpoint) {
  // With one state pure its weight vanishes identically; the other weight
  // tends to f(1, nbar) = nbar and the prefactor to 1.
  if (endpoint == SEndpoint::Zero) {
    if (!a.is_pure()) throw DomainError("renyi_overlap_limit: s -> 0 needs a pure first state");
    return overlap_value(intermediates_from_weights(a, b, 0.5, b.nbar() + 0.5, 1.0));
  }
  if (!b.is_pure()) throw DomainError("renyi_overlap_limit: s -> 1 needs a pure second state");
  return overlap_value(intermediates_from_weights(a, b, a.nbar() + 0.5, 0.5, 1.0));
}

double reduced_overlap(double s, double r_prime, double r, double nbar) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("reduced_overlap: s must lie in (0, 1)");
  if (r_prime < 0.0 || r < 0.0 || nbar < 0.0) {
    throw DomainError("reduced_overlap: r', r and nbar must be >= 0");
  }
  const double t = 1.0 - s;
  const double ch = std::cosh(r_prime);
  const double sh = std::sinh(r_prime);
  const double up_s = std::pow(nbar + 1.0, s);
  const double n_s = std::pow(nbar, s);
  const double first = up_s * std::pow(sh, t) - n_s * std::pow(ch, t);
  const double squeeze_gap = std::pow(ch, 2.0 * t) - std::pow(sh, 2.0 * t);
  const double thermal_gap = up_s * up_s - n_s * n_s;
  const double c = std::cosh(r - r_prime);
  const double bracket = first * first + squeeze_gap * thermal_gap * c * c;
  if (!(bracket > kDiscriminantFloor) || !std::isfinite(bracket)) {
    std::ostringstream msg;
    msg << "reduced_overlap: bracket " << bracket << " out of range at s=" << s
        << ", r'=" << r_prime;
    throw NumericGuardError(msg.str());
  }
  return std::exp(-t * r_prime) / std::sqrt(bracket);
}

ChernoffResult chernoff_overlap(const GaussianState& a, const GaussianState& b) {
  ChernoffResult out;
  const auto search = golden_minimize([&](double s) { return renyi_overlap(a, b, s); },
                                      kSEndpoint, 1.0 - kSEndpoint);
  out.q = search.value;
  out.s_star = search.x;
  out.evaluations = search.evaluations;

  if (a.is_pure()) {
    const double q0 = renyi_overlap_limit(a, b, SEndpoint::Zero);
    ++out.evaluations;
    if (q0 < out.q) {
      out.q = q0;
      out.s_star = 0.0;
      out.pure_branch = true;
    }
  }
  if (b.is_pure()) {
    const double q1 = renyi_overlap_limit(a, b, SEndpoint::One);
    ++out.evaluations;
    if (q1 < out.q) {
      out.q = q1;
      out.s_star = 1.0;
      out.pure_branch = true;
    }
  }
  return out;
}

}  // namespace qcnc
