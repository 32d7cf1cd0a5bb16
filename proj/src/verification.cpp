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

#include "qcnc/verification.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qcnc/errors.hpp"
#include "qcnc/fock_oracle.hpp"
#include "qcnc/nonclassicality.hpp"
#include "qcnc/overlap.hpp"

namespace qcnc {

namespace {

constexpr double kBoundSlack = 1e-8;
constexpr double kConvexitySlack = 1e-10;
constexpr double kClosedInvarianceTol = 1e-12;
constexpr double kOracleInvarianceTol = 1e-7;
constexpr int kSmallDim = 16;
constexpr int kConjugationDim = 48;

std::complex<double> disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rho = radius * std::sqrt(unit(rng));
  return std::polar(rho, 2.0 * std::numbers::pi * unit(rng));
}

GaussianState draw_state(std::mt19937_64& rng, double nbar_max, double r_max,
                         double alpha_max) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto alpha = disk_point(rng, alpha_max);
  const double r = r_max * unit(rng);
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  const double nbar = nbar_max * unit(rng);
  return {alpha, r, phi, nbar};
}

fock::FockOperator without_spectrum(const fock::FockOperator& op) {
  return {op.entries(), op.trace_defect(), op.kind()};
}

std::string describe(const RandomPair& p, int index) {
  std::ostringstream out;
  out << "draw " << index << " (a: alpha=" << p.a.alpha() << " r=" << p.a.r()
      << " phi=" << p.a.phi() << " nbar=" << p.a.nbar() << "; b: alpha=" << p.b.alpha()
      << " r=" << p.b.r() << " phi=" << p.b.phi() << " nbar=" << p.b.nbar()
      << "; s=" << p.s << ")";
  return out.str();
}

struct OracleSample {
  double closed_qs = 0.0;
  double oracle_qs = 0.0;
  double chernoff = 0.0;
  double q_half = 0.0;
  double fidelity = 0.0;
  double trace_distance = 0.0;
};

}  // namespace

std::vector<RandomPair> draw_oracle_pairs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> exponent(0.1, 0.9);
  std::vector<RandomPair> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    RandomPair p;
    p.a = draw_state(rng, 1.5, 1.2, 1.0);
    p.b = draw_state(rng, 1.5, 1.2, 1.0);
    p.s = exponent(rng);
    out.push_back(p);
  }
  return out;
}

std::vector<SuiteReport> run_verification(const VerifyConfig& config) {
  if (config.draws < 1) throw DomainError("run_verification: draws must be >= 1");
  const auto pairs = draw_oracle_pairs(config.seed, config.draws);

  std::vector<OracleSample> samples;
  samples.reserve(pairs.size());
  for (const auto& p : pairs) {
    const auto rho = fock::build_dsts_adaptive(p.a, config.dim_tol);
    const auto sigma = fock::build_dsts_adaptive(p.b, config.dim_tol);
    OracleSample sample;
    sample.closed_qs = renyi_overlap(p.a, p.b, p.s);
    sample.oracle_qs = fock::oracle_renyi(rho, sigma, p.s);
    sample.chernoff = chernoff_overlap(p.a, p.b).q;
    sample.q_half = renyi_overlap(p.a, p.b, 0.5);
    sample.fidelity = fock::oracle_fidelity(rho, sigma);
    sample.trace_distance = fock::oracle_trace_distance(rho, sigma);
    samples.push_back(sample);
  }

  std::vector<SuiteReport> reports;

  {
    SuiteReport r;
    r.name = "oracle_agreement";
    int worst_index = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double residual = std::abs(samples[i].closed_qs - samples[i].oracle_qs);
      if (residual > r.worst) {
        r.worst = residual;
        worst_index = static_cast<int>(i);
      }
    }
    r.checks = static_cast<int>(samples.size());
    r.passed = r.worst < config.tol;
    r.detail = "worst at " + describe(pairs[worst_index], worst_index);
    reports.push_back(r);
  }

  auto bound_suite = [&](const char* name, auto&& slacks) {
    SuiteReport r;
    r.name = name;
    r.worst = std::numeric_limits<double>::infinity();
    int worst_index = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (const double slack : slacks(samples[i])) {
        ++r.checks;
        if (slack < r.worst) {
          r.worst = slack;
          worst_index = static_cast<int>(i);
        }
      }
    }
    r.passed = r.worst >= -kBoundSlack;
    r.detail = "min slack at " + describe(pairs[worst_index], worst_index);
    reports.push_back(r);
  };
  bound_suite("fidelity_bounds", [](const OracleSample& x) {
    return std::array{x.chernoff - x.fidelity, std::sqrt(x.fidelity) - x.chernoff};
  });
  bound_suite("trace_distance_bounds", [](const OracleSample& x) {
    return std::array{x.trace_distance - (1.0 - x.chernoff),
                      std::sqrt(std::max(0.0, 1.0 - x.chernoff * x.chernoff)) -
                          x.trace_distance};
  });
  bound_suite("holevo_chain", [](const OracleSample& x) {
    return std::array{x.trace_distance - (1.0 - x.q_half),
                      std::sqrt(std::max(0.0, 1.0 - x.q_half * x.q_half)) -
                          x.trace_distance};
  });

  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  {
    SuiteReport r;
    r.name = "convexity";
    r.worst = std::numeric_limits<double>::infinity();
    for (const auto& p : pairs) {
      std::array<double, 3> s{0.01 + 0.98 * unit(rng), 0.01 + 0.98 * unit(rng),
                              0.01 + 0.98 * unit(rng)};
      std::sort(s.begin(), s.end());
      if (s[2] - s[0] < 1e-6) continue;
      const double q1 = renyi_overlap(p.a, p.b, s[0]);
      const double q2 = renyi_overlap(p.a, p.b, s[1]);
      const double q3 = renyi_overlap(p.a, p.b, s[2]);
      const double chord = ((s[2] - s[1]) * q1 + (s[1] - s[0]) * q3) / (s[2] - s[0]);
      r.worst = std::min(r.worst, chord - q2);
      ++r.checks;
    }
    r.passed = r.worst >= -kConvexitySlack;
    r.detail = "min chord slack";
    reports.push_back(r);
  }

  {
    SuiteReport r;
    r.name = "multiplicativity";
    const int count = std::min(config.draws, 5);
    for (int i = 0; i < count; ++i) {
      const auto r1 = draw_state(rng, 0.1, 0.1, 0.25);
      const auto s1 = draw_state(rng, 0.1, 0.1, 0.25);
      const auto r2 = draw_state(rng, 0.1, 0.1, 0.25);
      const auto s2 = draw_state(rng, 0.1, 0.1, 0.25);
      const double s = 0.3 + 0.4 * unit(rng);
      const auto left = fock::tensor_product(fock::build_dsts(r1, kSmallDim),
                                             fock::build_dsts(r2, kSmallDim));
      const auto right = fock::tensor_product(fock::build_dsts(s1, kSmallDim),
                                              fock::build_dsts(s2, kSmallDim));
      const double product = renyi_overlap(r1, s1, s) * renyi_overlap(r2, s2, s);
      r.worst = std::max(r.worst, std::abs(fock::oracle_renyi(left, right, s) - product));
      ++r.checks;
    }
    r.passed = r.worst < config.tol;
    r.detail = "tensor factors truncated to " + std::to_string(kSmallDim) + " levels";
    reports.push_back(r);
  }

  {
    SuiteReport r;
    r.name = "invariance";
    double worst_closed = 0.0;
    for (const auto& p : pairs) {
      const auto delta = disk_point(rng, 1.0);
      const double dphi = 2.0 * std::numbers::pi * unit(rng);
      const double base = renyi_overlap(p.a, p.b, p.s);
      const double shifted = renyi_overlap(p.a.displaced(delta), p.b.displaced(delta), p.s);
      const double turned =
          renyi_overlap(p.a.rotated(dphi), p.b.rotated(dphi), p.s);
      worst_closed = std::max({worst_closed, std::abs(shifted - base), std::abs(turned - base)});
      r.checks += 2;
    }
    double worst_oracle = 0.0;
    const int count = std::min(config.draws, 5);
    for (int i = 0; i < count; ++i) {
      const auto a = draw_state(rng, 0.3, 0.3, 0.3);
      const auto b = draw_state(rng, 0.3, 0.3, 0.3);
      const double s = 0.3 + 0.4 * unit(rng);
      const auto u = fock::displacement_operator(disk_point(rng, 0.5), kConjugationDim);
      const auto rho = without_spectrum(fock::build_dsts(a, kConjugationDim));
      const auto sigma = without_spectrum(fock::build_dsts(b, kConjugationDim));
      const double before = fock::oracle_renyi(rho, sigma, s);
      const double after =
          fock::oracle_renyi(fock::conjugated(u, rho), fock::conjugated(u, sigma), s);
      worst_oracle = std::max(worst_oracle, std::abs(after - before));
      ++r.checks;
    }
    r.worst = std::max(worst_closed, worst_oracle);
    r.passed = worst_closed < kClosedInvarianceTol && worst_oracle < kOracleInvarianceTol;
    std::ostringstream detail;
    detail << "closed-form shift/rotation " << worst_closed << ", oracle conjugation "
           << worst_oracle;
    r.detail = detail.str();
    reports.push_back(r);
  }

  {
    SuiteReport r;
    r.name = "boundary_assumption";
    const auto state = GaussianState::squeezed_thermal(2.0, 1.0);
    const auto saddle = chernoff_degree(state);
    const auto audit =
        audit_boundary_assumption(state, saddle, config.boundary_samples, config.seed);
    r.worst = audit.worst_excess;
    r.checks = audit.samples;
    r.passed = audit.passed;
    std::ostringstream detail;
    detail << "r=2 nbar=1 boundary optimum " << saddle.q_tilde << "; best interior state r="
           << audit.worst_state.r() << " nbar=" << audit.worst_state.nbar();
    r.detail = detail.str();
    reports.push_back(r);
  }

  return reports;
}

}  // namespace qcnc
