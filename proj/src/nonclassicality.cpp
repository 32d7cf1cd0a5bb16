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

#include "qcnc/nonclassicality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qcnc/errors.hpp"
#include "qcnc/line_search.hpp"
#include "qcnc/overlap.hpp"

namespace qcnc {

namespace {

constexpr double kBracketEdge = 1e-6;
constexpr double kBracketExtension = 1.0;
constexpr double kOrderAgreementLimit = 1e-6;

LineSearchOptions line_options(const SaddleOptions& options) {
  return {.x_tol = options.x_tol, .max_iterations = options.max_iterations};
}

void require_converged(const LineSearchResult& result, const char* what) {
  if (!result.converged) {
    std::ostringstream msg;
    msg << what << ": no convergence after " << result.iterations
        << " iterations (last iterate " << result.x << ")";
    throw ConvergenceError(msg.str(), result.x);
  }
}

// Maximizes g over r' in [0, r], widening the bracket once if the optimum
// sits on its upper edge.
template <class F>
InnerOptimum maximize_over_r_prime(const F& g, double r, const SaddleOptions& options,
                                   const char* what) {
  InnerOptimum out;
  auto search = scan_then_maximize(g, 0.0, r, options.coarse_points,
                                   line_options(options), options.value_tol);
  out.evaluations = search.evaluations;
  if (search.x > r - kBracketEdge) {
    search = scan_then_maximize(g, 0.0, r + kBracketExtension, options.coarse_points,
                                line_options(options), options.value_tol);
    out.evaluations += search.evaluations;
    out.extended = true;
  }
  require_converged(search, what);
  out.r_prime = search.x;
  out.q = search.value;
  return out;
}

}  // namespace

InnerOptimum max_over_boundary(double s, double r, double nbar,
                               const SaddleOptions& options) {
  return maximize_over_r_prime(
      [&](double rp) { return reduced_overlap(s, rp, r, nbar); }, r, options,
      "max_over_boundary");
}

SaddleResult min_max_saddle(double r, double nbar, const SaddleOptions& options) {
  SaddleResult out;
  const auto outer = golden_minimize(
      [&](double s) { return max_over_boundary(s, r, nbar, options).q; }, kSEndpoint,
      1.0 - kSEndpoint, line_options(options));
  require_converged(outer, "min_max_saddle");
  const auto inner = max_over_boundary(outer.x, r, nbar, options);
  out.s_tilde = outer.x;
  out.r_prime_tilde = inner.r_prime;
  out.q_tilde = inner.q;
  out.degree = 1.0 - out.q_tilde;
  out.iterations = outer.iterations;
  out.r_prime_exceeds_r = inner.r_prime > r;
  return out;
}

SaddleResult max_min_saddle(double r, double nbar, const SaddleOptions& options) {
  const auto lopts = line_options(options);
  auto min_over_s = [&](double rp) {
    return golden_minimize([&](double s) { return reduced_overlap(s, rp, r, nbar); },
                           kSEndpoint, 1.0 - kSEndpoint, lopts);
  };
  const auto outer = maximize_over_r_prime(
      [&](double rp) {
        const auto inner = min_over_s(rp);
        require_converged(inner, "max_min_saddle (inner)");
        return inner.value;
      },
      r, options, "max_min_saddle");
  const auto inner = min_over_s(outer.r_prime);
  SaddleResult out;
  out.s_tilde = inner.x;
  out.r_prime_tilde = outer.r_prime;
  out.q_tilde = inner.value;
  out.degree = 1.0 - out.q_tilde;
  out.iterations = inner.iterations;
  out.r_prime_exceeds_r = outer.r_prime > r;
  return out;
}

SaddleResult chernoff_degree(const GaussianState& state, const SaddleOptions& options) {
  const auto report = classicality(state);
  SaddleResult out;
  if (report.is_classical) {
    out.s_tilde = 0.5;
    out.r_prime_tilde = state.r();
    return out;
  }
  if (state.is_pure()) {
    out.s_tilde = 0.0;
    out.r_prime_tilde = 0.0;
    out.q_tilde = 1.0 / std::cosh(state.r());
    out.degree = 1.0 - out.q_tilde;
    return out;
  }
  out = min_max_saddle(state.r(), state.nbar(), options);
  const auto reversed = max_min_saddle(state.r(), state.nbar(), options);
  out.order_agreement = std::abs(out.q_tilde - reversed.q_tilde);
  out.converged = out.order_agreement < kOrderAgreementLimit;
  return out;
}

BuresResult bures_degree(const GaussianState& state) {
  const double excess = std::max(state.r() - classicality_threshold(state.nbar()), 0.0);
  BuresResult out;
  out.f_tilde = 1.0 / std::cosh(excess);
  out.degree_b = 1.0 - std::sqrt(out.f_tilde);
  return out;
}

std::vector<SaddleResult> threshold_diagnostics(double r, std::span<const double> nbar_grid,
                                                const SaddleOptions& options) {
  if (!(r > 0.0)) throw DomainError("threshold_diagnostics: r must be > 0");
  const double nbar_c = mixedness_threshold(r);
  for (const double nbar : nbar_grid) {
    if (!(nbar >= 0.0 && nbar < nbar_c)) {
      std::ostringstream msg;
      msg << "threshold_diagnostics: nbar=" << nbar << " outside [0, " << nbar_c << ")";
      throw DomainError(msg.str());
    }
  }
  std::vector<SaddleResult> out;
  out.reserve(nbar_grid.size());
  for (const double nbar : nbar_grid) {
    out.push_back(chernoff_degree(GaussianState::squeezed_thermal(r, nbar), options));
  }
  return out;
}

BoundaryAudit audit_boundary_assumption(const GaussianState& state,
                                        const SaddleResult& saddle, int samples,
                                        std::uint64_t seed, double slack) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Occupancies up to three times that of the boundary optimum cover the
  // neighbourhood where a competitor could plausibly win.
  const double nbar_hi = 3.0 * std::max(boundary_occupancy(saddle.r_prime_tilde), 0.5);

  BoundaryAudit audit;
  audit.samples = samples;
  audit.worst_excess = -1.0;
  for (int i = 0; i < samples; ++i) {
    const double nbar = nbar_hi * unit(rng);
    const double r = classicality_threshold(nbar) * unit(rng);
    std::complex<double> alpha = state.alpha();
    double phi = state.phi();
    if (i % 2 == 1) {
      alpha += std::polar(0.5 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
      phi = 2.0 * std::numbers::pi * unit(rng);
    }
    const GaussianState candidate(alpha, r, phi, nbar);
    const double excess = chernoff_overlap(state, candidate).q - saddle.q_tilde;
    if (excess > audit.worst_excess) {
      audit.worst_excess = excess;
      audit.worst_state = candidate;
    }
  }
  audit.passed = audit.worst_excess <= slack;
  return audit;
}

}  // namespace qcnc
