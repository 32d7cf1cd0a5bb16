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

#include "qcnc/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qcnc/errors.hpp"

namespace qcnc::fock {

namespace {

constexpr int kDimQuantum = 16;
constexpr double kFidelityCutoff = 1e-32;  // relative eigenvalue kept in fidelity

using RealMatrix = Eigen::MatrixXd;

// exp(-i H) for the Hermitian tridiagonal H with zero diagonal and
// subdiagonal H(k+1, k) = magnitudes[k] e^{i theta}. With P = diag(e^{i k theta}),
// H = P T P^dag for the real symmetric tridiagonal T, so
// exp(-i H)(j, k) = e^{i (j - k) theta} exp(-i T)(j, k).
Matrix expm_phase_tridiagonal(const Eigen::VectorXd& magnitudes, double theta) {
  const Eigen::Index n = magnitudes.size() + 1;
  if (n == 1) return Matrix::Identity(1, 1);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es;
  es.computeFromTridiagonal(Eigen::VectorXd::Zero(n), magnitudes, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) {
    throw NumericGuardError("expm_phase_tridiagonal: eigendecomposition failed");
  }
  const RealMatrix& v = es.eigenvectors();
  const Eigen::ArrayXd lam = es.eigenvalues().array();
  const RealMatrix re = (v * lam.cos().matrix().asDiagonal()) * v.transpose();
  const RealMatrix im = -(v * lam.sin().matrix().asDiagonal()) * v.transpose();
  Matrix out(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(j, k) = std::complex<double>(re(j, k), im(j, k)) *
                  std::polar(1.0, static_cast<double>(j - k) * theta);
    }
  }
  return out;
}

Matrix displacement_matrix(std::complex<double> alpha, int dim) {
  if (alpha == 0.0) return Matrix::Identity(dim, dim);
  // H = i (alpha a^dag - alpha^* a): H(n+1, n) = |alpha| sqrt(n+1) e^{i(arg alpha + pi/2)}.
  Eigen::VectorXd mags(dim - 1);
  for (int n = 0; n + 1 < dim; ++n) mags[n] = std::abs(alpha) * std::sqrt(n + 1.0);
  return expm_phase_tridiagonal(mags, std::arg(alpha) + 0.5 * std::numbers::pi);
}

Matrix squeeze_matrix(double r, double phi, int dim) {
  if (r == 0.0) return Matrix::Identity(dim, dim);
  // a^dag^2 only couples levels of equal parity; each parity sector is a
  // chain |p>, |p+2>, ... with H(k+1, k) = r/2 sqrt((n+1)(n+2)) e^{i(phi + pi/2)}.
  Matrix out = Matrix::Zero(dim, dim);
  const double theta = phi + 0.5 * std::numbers::pi;
  for (int parity = 0; parity < 2; ++parity) {
    const int len = (dim - parity + 1) / 2;
    if (len <= 0) continue;
    Eigen::VectorXd mags(std::max(len - 1, 0));
    for (int k = 0; k + 1 < len; ++k) {
      const double n = parity + 2.0 * k;
      mags[k] = 0.5 * r * std::sqrt((n + 1.0) * (n + 2.0));
    }
    const Matrix block = expm_phase_tridiagonal(mags, theta);
    for (int k = 0; k < len; ++k) {
      for (int j = 0; j < len; ++j) out(parity + 2 * j, parity + 2 * k) = block(j, k);
    }
  }
  return out;
}

// Thermal probabilities for the first `levels` Fock states, dropping the
// trailing zeros (a pure state keeps only the vacuum).
Eigen::VectorXd thermal_probabilities(double nbar, int levels) {
  if (nbar == 0.0) return Eigen::VectorXd::Ones(1);
  const double ratio = nbar / (nbar + 1.0);
  std::vector<double> p;
  p.reserve(levels);
  double value = 1.0 / (nbar + 1.0);
  for (int n = 0; n < levels && value > 0.0; ++n) {
    p.push_back(value);
    value *= ratio;
  }
  return Eigen::Map<Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
}

Matrix hermitized(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

Matrix padded_rows(const Matrix& m, Eigen::Index rows) {
  if (m.rows() == rows) return m;
  Matrix out = Matrix::Zero(rows, m.cols());
  out.topRows(m.rows()) = m;
  return out;
}

Matrix padded_square(const Matrix& m, Eigen::Index dim) {
  if (m.rows() == dim) return m;
  Matrix out = Matrix::Zero(dim, dim);
  out.topLeftCorner(m.rows(), m.cols()) = m;
  return out;
}

void require_density(const FockOperator& op, const char* where) {
  if (op.kind() != OperatorKind::Density) {
    throw DomainError(std::string(where) + ": expected a density matrix");
  }
  if (op.trace_defect() > kOracleDefectLimit) {
    std::ostringstream msg;
    msg << where << ": trace defect " << op.trace_defect() << " exceeds "
        << kOracleDefectLimit << " (dim " << op.dim() << ")";
    throw TruncationError(msg.str());
  }
}

// Eigenvectors of the two spectra expressed on a common number of levels.
struct AlignedPair {
  Matrix u;
  Matrix v;
};

AlignedPair align(const Spectrum& a, const Spectrum& b) {
  const auto rows = std::max(a.vectors.rows(), b.vectors.rows());
  return {padded_rows(a.vectors, rows), padded_rows(b.vectors, rows)};
}

}  // namespace

FockOperator::FockOperator(Matrix entries, double trace_defect, OperatorKind kind,
                           std::optional<Spectrum> exact_spectrum)
    : entries_(std::move(entries)),
      trace_defect_(trace_defect),
      kind_(kind),
      spectrum_(std::move(exact_spectrum)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw DomainError("FockOperator: entries must be a non-empty square matrix");
  }
}

FockOperator FockOperator::from_ket(const Vector& ket) {
  const double norm = ket.norm();
  if (std::abs(norm - 1.0) > 1e-12) throw DomainError("FockOperator::from_ket: ket not normalized");
  Spectrum spectrum{Eigen::VectorXd::Ones(1), ket};
  return FockOperator(ket * ket.adjoint(), 0.0, OperatorKind::Density, std::move(spectrum));
}

double FockOperator::hermiticity_residual() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

FockOperator build_thermal(double nbar, int dim) {
  if (dim < 1) throw DomainError("build_thermal: dim must be >= 1");
  if (nbar < 0.0) throw DomainError("build_thermal: nbar must be >= 0");
  const Eigen::VectorXd p = thermal_probabilities(nbar, dim);
  Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(dim);
  diagonal.head(p.size()) = p;
  const double defect = nbar == 0.0 ? 0.0 : std::pow(nbar / (nbar + 1.0), dim);
  Spectrum spectrum{p, Matrix::Identity(dim, p.size())};
  return FockOperator(diagonal.cast<std::complex<double>>().asDiagonal(), defect,
                      OperatorKind::Density, std::move(spectrum));
}

FockOperator displacement_operator(std::complex<double> alpha, int dim) {
  if (dim < 1) throw DomainError("displacement_operator: dim must be >= 1");
  return FockOperator(displacement_matrix(alpha, dim), 0.0, OperatorKind::Unitary);
}

FockOperator squeeze_operator(double r, double phi, int dim) {
  if (dim < 1) throw DomainError("squeeze_operator: dim must be >= 1");
  return FockOperator(squeeze_matrix(r, phi, dim), 0.0, OperatorKind::Unitary);
}

FockOperator build_dsts(const GaussianState& state, int dim, double max_defect) {
  if (dim < 1) throw DomainError("build_dsts: dim must be >= 1");
  const int working = 2 * dim;
  const Eigen::VectorXd p = thermal_probabilities(state.nbar(), working);
  const auto levels = p.size();

  // Only the columns of D S that carry thermal weight are needed.
  Matrix columns;
  const bool squeezed = state.r() != 0.0;
  const bool displaced = state.alpha() != 0.0;
  if (squeezed) {
    columns = squeeze_matrix(state.r(), state.phi(), working).leftCols(levels);
  } else {
    columns = Matrix::Identity(working, levels);
  }
  if (displaced) columns = displacement_matrix(state.alpha(), working) * columns;

  const Matrix top = columns.topRows(dim);
  Matrix entries = hermitized(top * p.cast<std::complex<double>>().asDiagonal() * top.adjoint());
  const double defect = std::abs(1.0 - entries.trace().real());
  if (defect > max_defect) {
    std::ostringstream msg;
    msg << "build_dsts: trace defect " << defect << " exceeds " << max_defect << " at dim "
        << dim << " (alpha=" << state.alpha() << ", r=" << state.r()
        << ", nbar=" << state.nbar() << ")";
    throw TruncationError(msg.str());
  }
  Spectrum spectrum{p, std::move(columns)};
  return FockOperator(std::move(entries), defect, OperatorKind::Density, std::move(spectrum));
}

namespace {

// Smallest admissible dim for one state together with its operator.
std::pair<int, std::optional<FockOperator>> minimal_build(const GaussianState& state,
                                                          double tol) {
  constexpr double kNoLimit = std::numeric_limits<double>::infinity();
  int dim = kDimQuantum;
  std::optional<FockOperator> probe;
  // Doubling scan until the defect is met.
  while (true) {
    probe.emplace(build_dsts(state, dim, kNoLimit));
    if (probe->trace_defect() < tol) break;
    if (dim >= kMaxDim) {
      std::ostringstream msg;
      msg << "adaptive_dim: trace defect " << probe->trace_defect() << " >= " << tol
          << " even at dim " << kMaxDim << " for state (alpha=" << state.alpha()
          << ", r=" << state.r() << ", phi=" << state.phi() << ", nbar=" << state.nbar()
          << ")";
      throw TruncationError(msg.str());
    }
    dim = std::min(2 * dim, kMaxDim);
  }
  if (dim == kDimQuantum) return {dim, std::move(probe)};

  // The probe's diagonal predicts the defect at every smaller cut; confirm the
  // candidate by an actual build and step up if the prediction was optimistic.
  const Eigen::VectorXd populations = probe->entries().diagonal().real();
  int candidate = dim / 2 + kDimQuantum;
  for (int d = dim / 2 + kDimQuantum; d <= dim; d += kDimQuantum) {
    candidate = d;
    if (std::abs(1.0 - populations.head(d).sum()) < tol) break;
  }
  for (int d = candidate; d < dim; d += kDimQuantum) {
    FockOperator trial = build_dsts(state, d, kNoLimit);
    if (trial.trace_defect() < tol) return {d, std::move(trial)};
  }
  return {dim, std::move(probe)};
}

}  // namespace

int adaptive_dim(std::span<const GaussianState> states, double tol) {
  if (!(tol > 0.0)) throw DomainError("adaptive_dim: tol must be > 0");
  int dim = kDimQuantum;
  for (const auto& state : states) dim = std::max(dim, minimal_build(state, tol).first);
  return dim;
}

FockOperator build_dsts_adaptive(const GaussianState& state, double tol) {
  if (!(tol > 0.0)) throw DomainError("build_dsts_adaptive: tol must be > 0");
  return std::move(*minimal_build(state, tol).second);
}

Spectrum spectrum_of(const FockOperator& rho) {
  if (rho.exact_spectrum()) return *rho.exact_spectrum();
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitized(rho.entries()));
  if (es.info() != Eigen::Success) throw NumericGuardError("spectrum_of: eigendecomposition failed");
  Spectrum out{es.eigenvalues(), es.eigenvectors()};
  const double smallest = out.values.minCoeff();
  if (smallest < kNegativeEigenvalueLimit) {
    std::ostringstream msg;
    msg << "spectrum_of: eigenvalue " << smallest << " below " << kNegativeEigenvalueLimit;
    throw NumericGuardError(msg.str());
  }
  out.values = out.values.cwiseMax(0.0);
  return out;
}

double oracle_renyi(const FockOperator& rho, const FockOperator& sigma, double s) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("oracle_renyi: s must lie in (0, 1)");
  require_density(rho, "oracle_renyi");
  require_density(sigma, "oracle_renyi");
  const Spectrum a = spectrum_of(rho);
  const Spectrum b = spectrum_of(sigma);
  const auto [u, v] = align(a, b);
  // Tr(rho^s sigma^{1-s}) = sum_ij p_i^s q_j^{1-s} |<u_i|v_j>|^2
  const Eigen::MatrixXd overlap2 = (u.adjoint() * v).cwiseAbs2();
  const Eigen::VectorXd ps = a.values.array().pow(s).matrix();
  const Eigen::VectorXd qs = b.values.array().pow(1.0 - s).matrix();
  return ps.dot(overlap2 * qs);
}

double oracle_fidelity(const FockOperator& rho, const FockOperator& sigma) {
  require_density(rho, "oracle_fidelity");
  require_density(sigma, "oracle_fidelity");
  const Spectrum a = spectrum_of(rho);
  const Spectrum b = spectrum_of(sigma);
  const auto [u, v] = align(a, b);

  auto kept = [](const Eigen::VectorXd& values) {
    std::vector<Eigen::Index> idx;
    const double cut = kFidelityCutoff * values.maxCoeff();
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      if (values[i] > cut) idx.push_back(i);
    }
    return idx;
  };
  const auto ia = kept(a.values);
  const auto ib = kept(b.values);
  Matrix ua(u.rows(), static_cast<Eigen::Index>(ia.size()));
  Matrix vb(v.rows(), static_cast<Eigen::Index>(ib.size()));
  Eigen::VectorXd sa(ua.cols());
  Eigen::VectorXd sb(vb.cols());
  for (Eigen::Index k = 0; k < ua.cols(); ++k) {
    ua.col(k) = u.col(ia[k]);
    sa[k] = std::sqrt(a.values[ia[k]]);
  }
  for (Eigen::Index k = 0; k < vb.cols(); ++k) {
    vb.col(k) = v.col(ib[k]);
    sb[k] = std::sqrt(b.values[ib[k]]);
  }
  // In rho's eigenbasis sqrt(rho) sigma sqrt(rho) = G G^dag with
  // G = diag(sqrt p) U^dag V diag(sqrt q); its eigenvalue square roots are
  // the singular values of G.
  const Matrix g = sa.cast<std::complex<double>>().asDiagonal() * (ua.adjoint() * vb) *
                   sb.cast<std::complex<double>>().asDiagonal();
  const Eigen::BDCSVD<Matrix> svd(g);
  const double root_fidelity = svd.singularValues().sum();
  return root_fidelity * root_fidelity;
}

double oracle_trace_distance(const FockOperator& rho, const FockOperator& sigma) {
  require_density(rho, "oracle_trace_distance");
  require_density(sigma, "oracle_trace_distance");
  const auto dim = std::max(rho.dim(), sigma.dim());
  const Matrix diff = hermitized(padded_square(rho.entries(), dim) -
                                 padded_square(sigma.entries(), dim));
  Eigen::SelfAdjointEigenSolver<Matrix> es(diff, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericGuardError("oracle_trace_distance: eigendecomposition failed");
  }
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

FockOperator tensor_product(const FockOperator& rho, const FockOperator& sigma) {
  const Matrix& a = rho.entries();
  const Matrix& b = sigma.entries();
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  const double defect =
      1.0 - (1.0 - rho.trace_defect()) * (1.0 - sigma.trace_defect());
  return FockOperator(std::move(out), std::abs(defect), rho.kind());
}

FockOperator conjugated(const FockOperator& unitary, const FockOperator& rho) {
  if (unitary.kind() != OperatorKind::Unitary) throw DomainError("conjugated: expected a unitary");
  if (unitary.dim() != rho.dim()) throw DomainError("conjugated: dimension mismatch");
  const Matrix& u = unitary.entries();
  return FockOperator(hermitized(u * rho.entries() * u.adjoint()), rho.trace_defect(),
                      OperatorKind::Density);
}

}  // namespace qcnc::fock
