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

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace esd::ode {

/// One classical fourth-order Runge-Kutta step for an autonomous system
/// y' = f(y). State must support `+` and scalar `*`.
template <typename State, typename Rhs>
State rk4_step(const State& y, double h, Rhs&& f) {
  const State k1 = f(y);
  const State k2 = f(y + k1 * (0.5 * h));
  const State k3 = f(y + k2 * (0.5 * h));
  const State k4 = f(y + k3 * h);
  return y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

/// Integrates over [0, span] with fixed steps no larger than `max_step`.
/// The step is shrunk uniformly so the final step lands exactly on `span`.
template <typename State, typename Rhs>
State rk4_integrate(State y, double span, double max_step, Rhs&& f) {
  if (span <= 0.0) return y;
  const auto steps =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(span / max_step - 1e-9)));
  const double h = span / static_cast<double>(steps);
  for (std::int64_t i = 0; i < steps; ++i) y = rk4_step(y, h, f);
  return y;
}

}  // namespace esd::ode
