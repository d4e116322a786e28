// Copyright 2026 The esdsim Authors
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

#include "analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace esd::analytic {
namespace {

void require_time(double t) {
  if (!(t >= 0.0)) throw InvalidArgument("time must be >= 0");
}

// w^2 = 1 - e^{-G1 t}
double omega_sq(double gamma1, double t) { return -std::expm1(-gamma1 * t); }

double ground_root(double gamma1, double t) {
  const double w2 = omega_sq(gamma1, t);
  return std::sqrt(w2 * w2 + 8.0 * w2);
}

}  // namespace

LambdaFamily LambdaFamily::make(double lambda) {
  if (!(lambda > 0.0 && lambda <= 4.0)) {
    throw InvalidArgument("lambda must lie in (0, 4], got " + std::to_string(lambda));
  }
  return LambdaFamily{lambda};
}

double coherence_single(double gamma1, double gamma2, double t) {
  require_time(t);
  return std::exp(-(0.5 * gamma1 + gamma2) * t);
}

double c_phase(LambdaFamily fam, double gamma2, double t) {
  require_time(t);
  return 2.0 * fam.lambda / 9.0 * std::exp(-gamma2 * t);
}

AmpElements amp_elements(LambdaFamily fam, double gamma1, double t) {
  require_time(t);
  const double w2 = omega_sq(gamma1, t);
  return {fam.lambda / 9.0 * std::exp(-gamma1 * t), std::exp(-2.0 * gamma1 * t) / 9.0,
          (w2 * w2 + 8.0 * w2) / 9.0};
}

double c_amp(LambdaFamily fam, double gamma1, double t) {
  require_time(t);
  if (fam.lambda < 3.0 || fam.lambda > 4.0) {
    throw InvalidArgument("amplitude-noise closed form holds for 3 <= lambda <= 4 only; "
                          "use the numeric path for lambda = " + std::to_string(fam.lambda));
  }
  return 2.0 / 9.0 * (fam.lambda - ground_root(gamma1, t)) * std::exp(-gamma1 * t);
}

double combined_bracket(LambdaFamily fam, double gamma1, double gamma2, double t) {
  require_time(t);
  return fam.lambda * std::exp(-gamma2 * t) - ground_root(gamma1, t);
}

double c_combined(LambdaFamily fam, double gamma1, double gamma2, double t) {
  return 2.0 / 9.0 * std::exp(-gamma1 * t) * std::max(0.0, combined_bracket(fam, gamma1, gamma2, t));
}

std::optional<double> esd_time_combined(LambdaFamily fam, double gamma1, double gamma2) {
  double slowest = 0.0;
  for (double g : {gamma1, gamma2}) {
    if (g > 0.0) slowest = slowest == 0.0 ? g : std::min(slowest, g);
  }
  if (slowest == 0.0) return std::nullopt;
  const double t_max = 20.0 / slowest;
  // The bracket is strictly decreasing in t, so one sign change at most.
  if (combined_bracket(fam, gamma1, gamma2, t_max) > 0.0) return std::nullopt;
  double lo = 0.0;
  double hi = t_max;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (combined_bracket(fam, gamma1, gamma2, mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace esd::analytic
