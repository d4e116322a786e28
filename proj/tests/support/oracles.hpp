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

#pragma once

// Reference computations that share no code with the library: plain
// bisection, the quadratic formula, and element formulas worked out by hand.

#include <cmath>
#include <functional>

namespace esd::testing {

/// Root of f on [lo, hi] with f(lo) > 0 >= f(hi), to the given width.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, double width = 1e-13) {
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Larger root of p x^2 + q x + r = 0.
inline double quadratic_root(double p, double q, double r) { return (-q + std::sqrt(q * q - 4.0 * p * r)) / (2.0 * p); }

/// Sudden-death time of rho_4 with G1 = G2 = 1: x = e^{-t} solves 15x^2 + 10x - 9 = 0.
inline double esd_lambda4_combined() { return -std::log(quadratic_root(15.0, 10.0, -9.0)); }

/// Amplitude-only sudden death of rho_l with G1 = 1: u = w^2 solves u^2 + 8u - l^2 = 0.
inline double esd_amplitude_only(double lambda) { return -std::log1p(-quadratic_root(1.0, 8.0, -lambda * lambda)); }

// Frozen from an mpmath evaluation at 30 digits.
inline constexpr double kEsdLambda4Combined = 0.67346081614314108836;
inline constexpr double kEsdLambda2Amplitude = 0.63891651896176015519;
inline constexpr double kEsdLambda18Amplitude = 0.48831822611271132842;
inline constexpr double kLn5 = 1.60943791243410037460;
inline constexpr double kAmpConcurrenceLambda4AtLn2 = 0.21538302079901885834;

/// X-state concurrence with d = 0 evolved under amplitude noise at rate 1 on both qubits,
/// written out from the element maps a -> a x^2, z -> z x, d -> a w^4 + (b + c) w^2.
inline double amplitude_only_concurrence(double a, double b, double c, double z, double t) {
  const double x = std::exp(-t);
  const double w2 = 1.0 - x;
  const double at = a * x * x;
  const double dt = a * w2 * w2 + (b + c) * w2;
  return 2.0 * std::fmax(0.0, z * x - std::sqrt(at * dt));
}

}  // namespace esd::testing
