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
#include <optional>
#include <span>

#include <Eigen/Dense>

#include "qcnc/gaussian_state.hpp"

// Brute-force reference computations on a truncated Fock space. Nothing in
// here uses the Gaussian closed forms; states are built as explicit matrices
// from the ladder operators and every matrix function goes through an
// eigendecomposition.
namespace qcnc::fock {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kOracleDefectLimit = 1e-8;
inline constexpr double kNegativeEigenvalueLimit = -1e-10;
inline constexpr int kMaxDim = 1024;

/// rho = vectors * diag(values) * vectors^dag with orthonormal columns.
struct Spectrum {
  Eigen::VectorXd values;
  Matrix vectors;
};

enum class OperatorKind { Density, Unitary };

class FockOperator {
 public:
  FockOperator(Matrix entries, double trace_defect, OperatorKind kind = OperatorKind::Density,
               std::optional<Spectrum> exact_spectrum = std::nullopt);

  /// |psi><psi| for a normalized ket.
  static FockOperator from_ket(const Vector& ket);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const noexcept { return entries_; }
  double trace_defect() const noexcept { return trace_defect_; }
  OperatorKind kind() const noexcept { return kind_; }

  /// Spectral factorization known by construction, if any. For displaced
  /// squeezed thermal states it lives on the working space (twice `dim`),
  /// whose lower half is what entries() shows.
  const std::optional<Spectrum>& exact_spectrum() const noexcept { return spectrum_; }

  /// max |A - A^dag| over entries.
  double hermiticity_residual() const;

 private:
  Matrix entries_;
  double trace_defect_;
  OperatorKind kind_;
  std::optional<Spectrum> spectrum_;
};

/// Thermal state truncated to `dim` levels; trace_defect = (nbar/(nbar+1))^dim.
FockOperator build_thermal(double nbar, int dim);

/// exp(alpha a^dag - alpha^* a) with the generator truncated to `dim` levels.
FockOperator displacement_operator(std::complex<double> alpha, int dim);

/// exp{r/2 [e^{i phi} a^dag^2 - e^{-i phi} a^2]} truncated to `dim` levels.
FockOperator squeeze_operator(double r, double phi, int dim);

/// D S rho_T S^dag D^dag. The operators act on a working space of 2 dim
/// levels; the result is the upper-left dim x dim block, re-Hermitized, and
/// trace_defect is the probability that falls outside it. Throws
/// TruncationError if that exceeds `max_defect`.
FockOperator build_dsts(const GaussianState& state, int dim,
                        double max_defect = kOracleDefectLimit);

/// Smallest multiple of 16 (at least 16) for which every state's build_dsts
/// trace defect is below `tol`. Throws TruncationError beyond kMaxDim.
int adaptive_dim(std::span<const GaussianState> states, double tol);

/// build_dsts at adaptive_dim({state}, tol).
FockOperator build_dsts_adaptive(const GaussianState& state, double tol);

/// The exact spectrum if known, otherwise a Hermitian eigendecomposition of
/// entries(). Eigenvalues in [kNegativeEigenvalueLimit, 0) are clamped to 0;
/// anything more negative throws NumericGuardError.
Spectrum spectrum_of(const FockOperator& rho);

/// Tr(rho^s sigma^{1-s}).
double oracle_renyi(const FockOperator& rho, const FockOperator& sigma, double s);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double oracle_fidelity(const FockOperator& rho, const FockOperator& sigma);

/// 1/2 ||rho - sigma||_1.
double oracle_trace_distance(const FockOperator& rho, const FockOperator& sigma);

/// rho (x) sigma on the product space (generic, no exact spectrum).
FockOperator tensor_product(const FockOperator& rho, const FockOperator& sigma);

/// U rho U^dag; U must be a Unitary operator of the same dimension.
FockOperator conjugated(const FockOperator& unitary, const FockOperator& rho);

}  // namespace qcnc::fock
