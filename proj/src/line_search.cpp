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

#include "qcnc/line_search.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qcnc/errors.hpp"

namespace qcnc {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt 5 - 1) / 2

}  // namespace

LineSearchResult golden_minimize(const std::function<double(double)>& f, double lo,
                                 double hi, const LineSearchOptions& options) {
  if (!(lo <= hi)) throw DomainError("golden_minimize: empty bracket");
  LineSearchResult out;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  out.evaluations = 2;

  while (b - a > options.x_tol && out.iterations < options.max_iterations) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++out.evaluations;
    ++out.iterations;
  }
  out.converged = b - a <= options.x_tol;

  if (fc <= fd) {
    out.x = c;
    out.value = fc;
  } else {
    out.x = d;
    out.value = fd;
  }

  // Parabola through (a, m, b).
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  out.evaluations += 3;
  for (const auto& [x, fx] : {std::pair{a, fa}, std::pair{m, fm}, std::pair{b, fb}}) {
    if (fx < out.value) {
      out.x = x;
      out.value = fx;
    }
  }
  const double h = 0.5 * (b - a);
  const double curvature = fa - 2.0 * fm + fb;
  if (h > 0.0 && curvature > 0.0) {
    const double xv = m - h * (fb - fa) / (2.0 * curvature);
    if (xv > a && xv < b) {
      const double fv = f(xv);
      ++out.evaluations;
      if (fv < out.value) {
        out.x = xv;
        out.value = fv;
      }
    }
  }
  return out;
}

LineSearchResult golden_maximize(const std::function<double(double)>& f, double lo,
                                 double hi, const LineSearchOptions& options) {
  auto out = golden_minimize([&f](double x) { return -f(x); }, lo, hi, options);
  out.value = -out.value;
  return out;
}

LineSearchResult scan_then_maximize(const std::function<double(double)>& f, double lo,
                                    double hi, int points,
                                    const LineSearchOptions& options,
                                    double unimodal_slack) {
  if (points < 3) throw DomainError("scan_then_maximize: need at least 3 points");
  if (!(lo < hi)) throw DomainError("scan_then_maximize: empty bracket");
  std::vector<double> xs(points);
  std::vector<double> ys(points);
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    xs[i] = i + 1 == points ? hi : lo + step * i;
    ys[i] = f(xs[i]);
  }
  const auto peak =
      static_cast<int>(std::max_element(ys.begin(), ys.end()) - ys.begin());
  for (int i = 1; i < points; ++i) {
    const bool rising_side = i <= peak;
    const double drop = rising_side ? ys[i - 1] - ys[i] : ys[i] - ys[i - 1];
    if (drop > unimodal_slack) {
      std::ostringstream msg;
      msg << "scan_then_maximize: scan is not unimodal near x=" << xs[i]
          << " (peak at x=" << xs[peak] << ", violation " << drop << ")";
      throw NumericGuardError(msg.str());
    }
  }

  const double a = xs[std::max(peak - 1, 0)];
  const double b = xs[std::min(peak + 1, points - 1)];
  auto out = golden_maximize(f, a, b, options);
  out.evaluations += points;
  if (ys[peak] > out.value) {
    out.x = xs[peak];
    out.value = ys[peak];
  }
  return out;
}

}  // namespace qcnc
