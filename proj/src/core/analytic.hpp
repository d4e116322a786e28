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

// Closed-form results for the one-parameter family
//   rho_l = (1/9) [[1,0,0,0],[0,4,l,0],[0,l,4,0],[0,0,0,0]]
// under symmetric noise on both qubits, and for single-qubit coherence.
// These are computed independently of the matrix machinery and serve as
// the oracle layer for tests and `esdsim validate`.

#include <optional>

namespace esd::analytic {

struct LambdaFamily {
  double lambda = 4.0;

  /// Throws InvalidArgument unless 0 < lambda <= 4.
  static LambdaFamily make(double lambda);
};

/// exp(-(G1/2 + G2) t): single-qubit coherence under both noises.
double coherence_single(double gamma1, double gamma2, double t);

/// (2 l / 9) exp(-G2 t).
double c_phase(LambdaFamily fam, double gamma2, double t);

struct AmpElements {
  double z;
  double a;
  double d;
};

/// Coherence and corner populations under amplitude noise at rate G1:
/// z = (l/9) e^{-G1 t}, a = (1/9) e^{-2 G1 t}, d = (w^4 + 8 w^2) / 9 with w^2 = 1 - e^{-G1 t}.
AmpElements amp_elements(LambdaFamily fam, double gamma1, double t);

/// (2/9) [l - sqrt(w^4 + 8 w^2)] e^{-G1 t}. Only valid for 3 <= l <= 4;
/// throws InvalidArgument otherwise.
double c_amp(LambdaFamily fam, double gamma1, double t);

/// (2/9) e^{-G1 t} max{0, l e^{-G2 t} - sqrt(w^4 + 8 w^2)}. Valid for every l.
double c_combined(LambdaFamily fam, double gamma1, double gamma2, double t);

/// l e^{-G2 t} - sqrt(w^4 + 8 w^2): the sign of the combined concurrence.
double combined_bracket(LambdaFamily fam, double gamma1, double gamma2, double t);

/// Root of combined_bracket by bisection to 1e-12, searched up to
/// 20 / min(positive rate). Empty when the bracket stays positive.
std::optional<double> esd_time_combined(LambdaFamily fam, double gamma1, double gamma2);

}  // namespace esd::analytic
