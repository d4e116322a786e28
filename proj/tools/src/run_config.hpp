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
#include <variant>
#include <vector>

#include "json.hpp"

namespace esdsim {

/// Raised for anything that makes a run configuration unusable; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// I/O failures; exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct XParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double z_re = 0.0;
  double z_im = 0.0;

  friend bool operator==(const XParams&, const XParams&) = default;
};

/// One lambda, or several for a sweep.
struct LambdaParams {
  std::vector<double> values;

  bool sweep() const { return values.size() > 1; }
  friend bool operator==(const LambdaParams&, const LambdaParams&) = default;
};

using StateParams = std::variant<XParams, LambdaParams>;

struct NoiseEntry {
  std::string target;  // "A" or "B"
  std::string kind;    // "amplitude" or "phase"
  double rate = 0.0;

  friend bool operator==(const NoiseEntry&, const NoiseEntry&) = default;
};

enum class Format { kCsv, kJson };

struct RunConfig {
  StateParams state = LambdaParams{{4.0}};
  std::vector<NoiseEntry> noises;
  std::optional<double> t_max;
  int samples = 100;
  double dt = 1e-4;
  std::optional<std::string> output;
  std::optional<Format> format;

  /// Throws ConfigError when an invariant fails.
  void check() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const RunConfig& cfg);

RunConfig load_config(const std::string& path);

/// Parses "A:amplitude:1.0" style noise flags.
NoiseEntry parse_noise_flag(const std::string& text);

Format parse_format(const std::string& text);
const char* format_name(Format f);

}  // namespace esdsim
