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

// qcnc: Chernoff and Bures degrees of nonclassicality for one-mode Gaussian
// states, saddle-surface dumps and the Fock-space verification suite.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcnc/errors.hpp"
#include "qcnc/gaussian_state.hpp"
#include "qcnc/nonclassicality.hpp"
#include "qcnc/overlap.hpp"
#include "qcnc/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

struct Options {
  double r = 0.0;
  double nbar = 0.0;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double phi = 0.0;
  int points = 50;
  int s_steps = 99;
  int rp_steps = 100;
  std::uint64_t seed = 42;
  int draws = 100;
  double tol = 1e-6;
  bool pretty = false;
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_rows(std::ostream& os, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows, bool pretty) {
  if (!pretty) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "  " : "") << std::string(width[i] - cells[i].size(), ' ') << cells[i];
    }
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

qcnc::GaussianState state_from(const Options& o) {
  try {
    return {{o.alpha_re, o.alpha_im}, o.r, o.phi, o.nbar};
  } catch (const qcnc::DomainError& e) {
    throw UsageError(e.what());
  }
}

int cmd_degree(const Options& o) {
  const auto state = state_from(o);
  const auto report = qcnc::classicality(state);
  const auto chernoff = qcnc::chernoff_degree(state);
  const auto bures = qcnc::bures_degree(state);
  Output out(o.out);
  write_rows(out.stream(),
             {"nbar", "r", "r_c", "classical", "d_chernoff", "d_bures", "s_tilde",
              "r_prime_tilde", "q_tilde", "f_tilde"},
             {{num(state.nbar()), num(state.r()), num(report.r_c),
               o.pretty ? (report.is_classical ? "true" : "false")
                        : (report.is_classical ? "1" : "0"),
               num(chernoff.degree), num(bures.degree_b), num(chernoff.s_tilde),
               num(chernoff.r_prime_tilde), num(chernoff.q_tilde), num(bures.f_tilde)}},
             o.pretty);
  return chernoff.converged ? kExitOk : kExitNoConvergence;
}

int cmd_surface(const Options& o) {
  const auto state = state_from(o);
  if (qcnc::classicality(state).is_classical) {
    throw UsageError("surface: the state is classical (r <= r_c)");
  }
  if (o.s_steps < 2 || o.rp_steps < 2) throw UsageError("surface: steps must be >= 2");
  std::vector<std::vector<std::string>> rows;
  rows.reserve(static_cast<std::size_t>(o.s_steps) * o.rp_steps);
  for (int i = 0; i < o.s_steps; ++i) {
    const double s = 0.01 + 0.98 * i / (o.s_steps - 1);
    for (int j = 0; j < o.rp_steps; ++j) {
      const double rp = state.r() * j / (o.rp_steps - 1);
      rows.push_back({num(s), num(rp), num(qcnc::reduced_overlap(s, rp, state.r(), state.nbar()))});
    }
  }
  Output out(o.out);
  write_rows(out.stream(), {"s", "r_prime", "q"}, rows, o.pretty);
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  if (!(o.r > 0.0)) throw UsageError("sweep: --r must be > 0");
  if (o.points < 2) throw UsageError("sweep: --points must be >= 2");
  const auto probe = state_from(o);
  const double nbar_end = 0.995 * qcnc::mixedness_threshold(probe.r());
  std::vector<std::vector<std::string>> rows;
  bool converged = true;
  for (int i = 0; i < o.points; ++i) {
    const double nbar = nbar_end * i / (o.points - 1);
    const qcnc::GaussianState state({o.alpha_re, o.alpha_im}, o.r, o.phi, nbar);
    const auto chernoff = qcnc::chernoff_degree(state);
    const auto bures = qcnc::bures_degree(state);
    converged = converged && chernoff.converged;
    rows.push_back({num(nbar), num(chernoff.degree), num(bures.degree_b), num(chernoff.s_tilde),
                    num(chernoff.r_prime_tilde), num(chernoff.q_tilde), num(bures.f_tilde),
                    num(std::sqrt(bures.f_tilde))});
  }
  Output out(o.out);
  write_rows(out.stream(),
             {"nbar", "d_chernoff", "d_bures", "s_tilde", "r_prime_tilde", "q_tilde",
              "f_tilde", "sqrt_f_tilde"},
             rows, o.pretty);
  return converged ? kExitOk : kExitNoConvergence;
}

int cmd_verify(const Options& o) {
  if (o.draws < 1) throw UsageError("verify: --draws must be >= 1");
  if (!(o.tol > 0.0)) throw UsageError("verify: --tol must be > 0");
  qcnc::VerifyConfig config;
  config.seed = o.seed;
  config.draws = o.draws;
  config.tol = o.tol;
  const auto reports = qcnc::run_verification(config);
  Output out(o.out);
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.passed;
    out.stream() << (r.passed ? "PASS " : "FAIL ") << r.name << " worst=" << num(r.worst)
                 << " checks=" << r.checks << " | " << r.detail << '\n';
  }
  out.stream() << (all ? "all suites passed" : "verification FAILED") << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

void add_state_flags(CLI::App* cmd, Options& o, bool with_nbar) {
  cmd->add_option("--r", o.r, "squeeze factor r (dimensionless)")->required();
  if (with_nbar) {
    cmd->add_option("--nbar", o.nbar, "thermal mean occupancy nbar (photons, >= 0)")
        ->required();
  }
  cmd->add_option("--alpha-re", o.alpha_re, "coherent amplitude, real part (dimensionless)");
  cmd->add_option("--alpha-im", o.alpha_im,
                  "coherent amplitude, imaginary part (dimensionless)");
  cmd->add_option("--phi", o.phi, "squeeze angle (radians)");
}

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--pretty", o.pretty, "aligned text instead of CSV");
  cmd->add_option("--out", o.out, "output file path (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Chernoff degree of nonclassicality for one-mode Gaussian states"};
  app.require_subcommand(1);
  Options o;

  auto* degree = app.add_subcommand("degree", "Chernoff and Bures degrees of one state");
  add_state_flags(degree, o, true);
  add_common_flags(degree, o);

  auto* surface = app.add_subcommand("surface", "grid of Q_G(s, r') for the saddle plot");
  add_state_flags(surface, o, true);
  surface->add_option("--s-steps", o.s_steps, "grid points in s on [0.01, 0.99] (count)");
  surface->add_option("--rp-steps", o.rp_steps, "grid points in r' on [0, r] (count)");
  add_common_flags(surface, o);

  auto* sweep = app.add_subcommand("sweep", "degrees versus nbar up to 0.995 e^r sinh r");
  add_state_flags(sweep, o, false);
  sweep->add_option("--points", o.points, "number of nbar grid points (count)");
  add_common_flags(sweep, o);

  auto* verify = app.add_subcommand("verify", "Fock-space oracle verification suites");
  verify->add_option("--seed", o.seed, "random seed (integer)");
  verify->add_option("--draws", o.draws, "random state pairs (count)");
  verify->add_option("--tol", o.tol, "agreement tolerance (absolute, dimensionless)");
  add_common_flags(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*degree) return cmd_degree(o);
    if (*surface) return cmd_surface(o);
    if (*sweep) return cmd_sweep(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qcnc::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qcnc::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const qcnc::NumericGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
