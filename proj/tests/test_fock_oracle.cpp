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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "qcnc/errors.hpp"
#include "qcnc/fock_oracle.hpp"
#include "qcnc/line_search.hpp"
#include "qcnc/overlap.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using qcnc::GaussianState;
namespace fock = qcnc::fock;

namespace {

fock::Vector coherent_ket(std::complex<double> alpha, int dim) {
  fock::Vector ket(dim);
  std::complex<double> c = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n < dim; ++n) {
    ket[n] = c;
    c *= alpha / std::sqrt(n + 1.0);
  }
  return ket / ket.norm();
}

// max over r' of the oracle fidelity to the boundary state with the same
// displacement and squeeze angle.
double max_boundary_fidelity(const GaussianState& state, double tol) {
  const auto rho = fock::build_dsts_adaptive(state, tol);
  auto f = [&](double rp) {
    const GaussianState sigma(state.alpha(), rp, state.phi(), qcnc::boundary_occupancy(rp));
    return fock::oracle_fidelity(rho, fock::build_dsts_adaptive(sigma, tol));
  };
  return qcnc::golden_maximize(f, 0.0, state.r(), {.x_tol = 1e-5}).value;
}

}  // namespace

TEST_CASE("build_thermal reference matrices", "[fock_oracle]") {
  const auto vac = fock::build_thermal(0.0, 5);
  CHECK(vac.trace_defect() == 0.0);
  CHECK(vac.entries()(0, 0) == 1.0);
  CHECK(vac.entries().cwiseAbs().sum() == 1.0);

  const auto t = fock::build_thermal(1.0, 3);
  CHECK(t.entries()(0, 0).real() == 0.5);
  CHECK(t.entries()(1, 1).real() == 0.25);
  CHECK(t.entries()(2, 2).real() == 0.125);
  CHECK_THAT(t.trace_defect(), WithinAbs(0.125, 1e-15));

  CHECK(fock::build_thermal(2.0, 56).trace_defect() >= 1e-10);
  CHECK(fock::build_thermal(2.0, 57).trace_defect() < 1e-10);
  CHECK_THROWS_AS(fock::build_thermal(1.0, 0), qcnc::DomainError);
}

TEST_CASE("build_dsts photon statistics", "[fock_oracle]") {
  const auto vac = fock::build_dsts(GaussianState{}, 16);
  CHECK_THAT(vac.entries()(0, 0).real(), WithinAbs(1.0, 1e-15));
  CHECK(vac.entries().cwiseAbs().sum() < 1.0 + 1e-14);

  const auto coh = fock::build_dsts(GaussianState::coherent(2.0), 48);
  double poisson = std::exp(-4.0);
  for (int n = 0; n <= 10; ++n) {
    CHECK_THAT(coh.entries()(n, n).real(), WithinAbs(poisson, 1e-8));
    poisson *= 4.0 / (n + 1);
  }

  const auto sq = fock::build_dsts(GaussianState::squeezed_thermal(0.5, 0.0), 64);
  double mean = 0.0;
  for (int n = 0; n < sq.dim(); ++n) {
    if (n % 2 == 1) CHECK(std::abs(sq.entries()(n, n)) < 1e-12);
    mean += n * sq.entries()(n, n).real();
  }
  CHECK_THAT(mean, WithinAbs(std::sinh(0.5) * std::sinh(0.5), 1e-8));
  CHECK(sq.hermiticity_residual() < 1e-10);

  CHECK_THROWS_AS(fock::build_dsts(GaussianState::thermal(1.0), 16), qcnc::TruncationError);
}

TEST_CASE("truncated unitaries", "[fock_oracle]") {
  const int dim = 64;
  for (const auto& u : {fock::displacement_operator({0.8, -0.5}, dim),
                        fock::squeeze_operator(0.7, 1.3, dim)}) {
    CHECK(u.kind() == fock::OperatorKind::Unitary);
    CHECK(u.trace_defect() == 0.0);
    for (int k = 0; k < dim / 2; ++k) CHECK_THAT(u.entries().col(k).norm(), WithinAbs(1.0, 1e-6));
  }
  // D(alpha)|0> is the coherent state.
  const auto d = fock::displacement_operator({0.6, 0.2}, dim);
  CHECK((d.entries().col(0) - coherent_ket({0.6, 0.2}, dim)).norm() < 1e-12);
}

TEST_CASE("build_dsts is Hermitian with a nonnegative spectrum", "[fock_oracle][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const GaussianState st({u(rng), -u(rng)}, 1.2 * u(rng), 6.0 * u(rng), 1.5 * u(rng));
    const auto rho = fock::build_dsts_adaptive(st, 1e-10);
    CHECK(rho.trace_defect() < 1e-10);
    CHECK(rho.hermiticity_residual() < 1e-10);
    const auto generic = fock::FockOperator(rho.entries(), rho.trace_defect());
    CHECK(fock::spectrum_of(generic).values.minCoeff() >= 0.0);
  }
}

TEST_CASE("spectrum_of clamps round-off negatives only", "[fock_oracle]") {
  fock::Matrix m = fock::Matrix::Zero(2, 2);
  m(0, 0) = 1.0 + 1e-11;
  m(1, 1) = -1e-11;
  CHECK(fock::spectrum_of(fock::FockOperator(m, 0.0)).values.minCoeff() == 0.0);
  m(0, 0) = 1.0 + 1e-9;
  m(1, 1) = -1e-9;
  CHECK_THROWS_AS(fock::spectrum_of(fock::FockOperator(m, 0.0)), qcnc::NumericGuardError);
}

TEST_CASE("oracle_renyi reference values", "[fock_oracle]") {
  const auto t = fock::build_thermal(1.0, 200);
  CHECK_THAT(fock::oracle_renyi(t, t, 0.5), WithinAbs(1.0, 1e-8));

  const auto c0 = fock::build_dsts(GaussianState::coherent(0.0), 32);
  const auto c1 = fock::build_dsts(GaussianState::coherent(1.0), 32);
  CHECK_THAT(fock::oracle_renyi(c0, c1, 0.3), WithinAbs(std::exp(-1.0), 1e-8));

  CHECK_THROWS_AS(fock::oracle_renyi(t, t, 0.0), qcnc::DomainError);
  CHECK_THROWS_AS(fock::oracle_renyi(t, fock::build_thermal(1.0, 20), 0.5),
                  qcnc::TruncationError);
  CHECK_THROWS_AS(fock::oracle_renyi(t, fock::displacement_operator(0.1, 200), 0.5),
                  qcnc::DomainError);
}

TEST_CASE("oracle_renyi matches the closed form", "[fock_oracle][oracle]") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 8; ++i) {
    const GaussianState a(std::polar(u(rng), 6.283 * u(rng)), u(rng), 6.283 * u(rng),
                          1.5 * u(rng));
    const GaussianState b(std::polar(u(rng), 6.283 * u(rng)), u(rng), 6.283 * u(rng),
                          1.5 * u(rng));
    const double s = 0.1 + 0.8 * u(rng);
    const auto rho = fock::build_dsts(a, 250);
    const auto sigma = fock::build_dsts(b, 250);
    CHECK_THAT(fock::oracle_renyi(rho, sigma, s), WithinAbs(qcnc::renyi_overlap(a, b, s), 1e-6));
    // The generic path agrees with the exact-spectrum path.
    if (i < 2) {
      const fock::FockOperator generic_a(rho.entries(), rho.trace_defect());
      CHECK_THAT(fock::oracle_renyi(generic_a, sigma, s),
                 WithinAbs(fock::oracle_renyi(rho, sigma, s), 1e-6));
    }
  }
}

TEST_CASE("oracle_fidelity reference values", "[fock_oracle]") {
  const auto rho = fock::build_dsts(GaussianState({0.2, 0.1}, 0.4, 0.5, 0.6), 64);
  CHECK_THAT(fock::oracle_fidelity(rho, rho), WithinAbs(1.0, 1e-8));

  // Pure versus mixed: F = <psi|sigma|psi>.
  const int dim = 64;
  const fock::Vector psi = coherent_ket({0.5, -0.3}, dim);
  const auto pure = fock::FockOperator::from_ket(psi);
  const auto sigma = fock::build_dsts(GaussianState({-0.2, 0.4}, 0.5, 1.0, 0.8), dim);
  const double direct = (psi.adjoint() * sigma.entries() * psi)(0, 0).real();
  CHECK_THAT(fock::oracle_fidelity(pure, sigma), WithinAbs(direct, 1e-9));
  CHECK_THAT(fock::oracle_fidelity(sigma, pure), WithinAbs(direct, 1e-9));
}

TEST_CASE("maximal boundary fidelity is sech(r - r_c)", "[fock_oracle][oracle]") {
  for (const auto [r, nbar] : {std::pair{1.0, 0.3}, std::pair{1.2, 0.8}}) {
    const auto state = GaussianState::squeezed_thermal(r, nbar);
    const double expected = 1.0 / std::cosh(r - qcnc::classicality_threshold(nbar));
    CHECK_THAT(max_boundary_fidelity(state, 1e-10), WithinAbs(expected, 1e-5));
  }
}

TEST_CASE("strong squeezing lies outside the oracle truncation cap", "[fock_oracle]") {
  // r = 2, nbar = 1 still loses ~6e-7 of its trace at the largest dim.
  const std::vector<GaussianState> state{GaussianState::squeezed_thermal(2.0, 1.0)};
  CHECK_THROWS_AS(fock::adaptive_dim(state, 1e-8), qcnc::TruncationError);
  CHECK_THAT(1.0 / std::cosh(2.0 - qcnc::classicality_threshold(1.0)),
             WithinAbs(0.444397, 1e-6));
}

TEST_CASE("oracle_trace_distance reference values", "[fock_oracle]") {
  const auto rho = fock::build_dsts(GaussianState({0.2, 0.1}, 0.4, 0.5, 0.6), 64);
  CHECK(fock::oracle_trace_distance(rho, rho) < 1e-14);

  fock::Vector e0 = fock::Vector::Zero(4);
  fock::Vector e1 = fock::Vector::Zero(4);
  e0[0] = 1.0;
  e1[1] = 1.0;
  CHECK_THAT(fock::oracle_trace_distance(fock::FockOperator::from_ket(e0),
                                         fock::FockOperator::from_ket(e1)),
             WithinAbs(1.0, 1e-15));
}

TEST_CASE("trace distance and fidelity bound the overlap", "[fock_oracle][property]") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 6; ++i) {
    const GaussianState a(std::polar(u(rng), 6.283 * u(rng)), u(rng), 6.283 * u(rng),
                          1.5 * u(rng));
    const GaussianState b(std::polar(u(rng), 6.283 * u(rng)), u(rng), 6.283 * u(rng),
                          1.5 * u(rng));
    const auto rho = fock::build_dsts_adaptive(a, 1e-10);
    const auto sigma = fock::build_dsts_adaptive(b, 1e-10);
    const double q = qcnc::chernoff_overlap(a, b).q;
    const double t = fock::oracle_trace_distance(rho, sigma);
    const double f = fock::oracle_fidelity(rho, sigma);
    CHECK(1.0 - q <= t + 1e-6);
    CHECK(t <= std::sqrt(1.0 - q * q) + 1e-6);
    CHECK(f <= q + 1e-6);
    CHECK(q <= std::sqrt(f) + 1e-6);
  }
}

TEST_CASE("adaptive_dim", "[fock_oracle]") {
  const std::vector<GaussianState> vac{GaussianState{}};
  CHECK(fock::adaptive_dim(vac, 1e-10) == 16);

  const std::vector<GaussianState> thermal{GaussianState::thermal(2.0)};
  CHECK(fock::adaptive_dim(thermal, 1e-10) == 64);

  // Regression value found by the scan itself.
  const std::vector<GaussianState> squeezed{GaussianState::squeezed_thermal(2.0, 0.0)};
  const int dim = fock::adaptive_dim(squeezed, 1e-10);
  CHECK(dim == 576);
  CHECK(fock::build_dsts(squeezed[0], dim, 1.0).trace_defect() < 1e-10);
  CHECK(fock::build_dsts(squeezed[0], dim - 16, 1.0).trace_defect() >= 1e-10);

  const std::vector<GaussianState> both{GaussianState{}, GaussianState::thermal(2.0)};
  CHECK(fock::adaptive_dim(both, 1e-10) == 64);

  const std::vector<GaussianState> hot{GaussianState::thermal(50.0)};
  CHECK_THROWS_AS(fock::adaptive_dim(hot, 1e-10), qcnc::TruncationError);
  CHECK_THROWS_AS(fock::adaptive_dim(vac, 0.0), qcnc::DomainError);
}

TEST_CASE("oracle_renyi is multiplicative on tensor products", "[fock_oracle][property]") {
  const GaussianState a1({0.1, 0.0}, 0.1, 0.3, 0.05);
  const GaussianState b1({0.0, 0.1}, 0.05, 1.0, 0.1);
  const GaussianState a2({-0.1, 0.05}, 0.08, 2.0, 0.08);
  const GaussianState b2({0.05, 0.05}, 0.1, 0.7, 0.02);
  const int dim = 16;
  const auto ra1 = fock::build_dsts(a1, dim);
  const auto rb1 = fock::build_dsts(b1, dim);
  const auto ra2 = fock::build_dsts(a2, dim);
  const auto rb2 = fock::build_dsts(b2, dim);
  const auto rho = fock::tensor_product(ra1, ra2);
  const auto sigma = fock::tensor_product(rb1, rb2);
  CHECK(rho.dim() == dim * dim);
  CHECK_FALSE(rho.exact_spectrum().has_value());
  for (const double s : {0.3, 0.5, 0.7}) {
    const double joint = fock::oracle_renyi(rho, sigma, s);
    CHECK_THAT(joint, WithinAbs(fock::oracle_renyi(ra1, rb1, s) * fock::oracle_renyi(ra2, rb2, s),
                                1e-6));
    CHECK_THAT(joint, WithinAbs(qcnc::renyi_overlap(a1, b1, s) * qcnc::renyi_overlap(a2, b2, s),
                                1e-6));
  }
}

TEST_CASE("oracle_renyi is invariant under a common displacement", "[fock_oracle][property]") {
  const int dim = 48;
  const GaussianState a({0.2, 0.1}, 0.3, 0.4, 0.2);
  const GaussianState b({-0.1, 0.2}, 0.2, 1.4, 0.3);
  const auto rho = fock::build_dsts(a, dim);
  const auto sigma = fock::build_dsts(b, dim);
  const auto d = fock::displacement_operator({0.3, -0.2}, dim);
  const auto rho_d = fock::conjugated(d, rho);
  const auto sigma_d = fock::conjugated(d, sigma);
  for (const double s : {0.2, 0.5, 0.8}) {
    CHECK_THAT(fock::oracle_renyi(rho_d, sigma_d, s),
               WithinAbs(fock::oracle_renyi(rho, sigma, s), 1e-7));
  }
  CHECK_THROWS_AS(fock::conjugated(rho, sigma), qcnc::DomainError);
}
