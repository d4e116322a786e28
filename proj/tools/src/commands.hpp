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

#include <optional>
#include <stdexcept>
#include <string>

#include "run_config.hpp"

namespace esdsim {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitConfig = 2,
  kExitSeparable = 3,
  kExitValidation = 4,
};

class SeparableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Library failures that are neither bad input nor I/O.
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  std::string text;
  int exit_code = kExitOk;
};

/// 17 significant digits, scientific.
std::string format_real(double v);

CommandResult cmd_trace(const RunConfig& cfg, Format format);

CommandResult cmd_esd(const RunConfig& cfg, Format format);

struct DiagramOptions {
  std::string panel = "i";
  int resolution = 64;
  unsigned workers = 1;
  std::optional<double> t_max;
};

CommandResult cmd_diagram(const DiagramOptions& opts, Format format);

struct AdditivityOptions {
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double t_max = 5.0;
  int samples = 20;
  double dt = 1e-4;
};

CommandResult cmd_additivity(const AdditivityOptions& opts, Format format);

struct ValidateOptions {
  double amplitude_omega_perturbation = 0.0;
  bool drop_combined_normalization = false;
};

CommandResult cmd_validate(const ValidateOptions& opts, Format format);

}  // namespace esdsim
