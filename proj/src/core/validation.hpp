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

// Analytic-versus-numeric checks shared by the CLI and the test suites.

#include <span>
#include <string>
#include <vector>

namespace esd {

struct AdditivityRow {
  double t;
  double kraus;
  double lindblad;
  double analytic;
};

struct AdditivityReport {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double dt = 0.0;
  std::vector<AdditivityRow> rows;
  double max_dev_kraus = 0.0;
  double max_dev_lindblad = 0.0;
  bool pass = false;

  static constexpr double kKrausTolerance = 1e-10;
  static constexpr double kLindbladTolerance = 1e-6;
};

/// Single-qubit coherence ratio rho_12(t) / rho_12(0) under amplitude (G1)
/// and phase (G2) noise together, three ways: composed Kraus channels, RK4
/// on the master equation, and exp(-(G1/2 + G2) t). `times` must be ascending.
AdditivityReport additivity(double gamma1, double gamma2, std::span<const double> times, double dt);

struct ValidationOptions {
  /// Added to the amplitude Kraus omega in the element checks.
  double amplitude_omega_perturbation = 0.0;
  /// Scales the combined-noise closed form by 9, undoing its normalization.
  bool drop_combined_normalization = false;
};

struct CheckResult {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Runs every named oracle check. Never throws for a failing check; an
/// exception inside a check is reported as that check failing.
ValidationReport run_validation(const ValidationOptions& options = {});

}  // namespace esd
