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

#include <stdexcept>
#include <string>

namespace esd {

/// Bad caller input: wrong dimensions, negative times, out-of-domain parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced something that cannot be a valid result
/// (complex spectrum where a real one is guaranteed, drift after integration).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StateDefect { kNotHermitian, kTraceMismatch, kNotPositive };

inline const char* to_string(StateDefect d) {
  switch (d) {
    case StateDefect::kNotHermitian: return "not hermitian";
    case StateDefect::kTraceMismatch: return "trace mismatch";
    case StateDefect::kNotPositive: return "not positive semidefinite";
  }
  return "unknown";
}

/// A matrix failed density-matrix validation. `magnitude` is the size of
/// the offending defect (max hermiticity residual, |tr - 1|, or -min eigenvalue).
class InvalidState : public InvalidArgument {
 public:
  InvalidState(StateDefect defect, double magnitude)
      : InvalidArgument(std::string("invalid density matrix: ") + to_string(defect) +
                        " (defect " + std::to_string(magnitude) + ")"),
        defect_(defect),
        magnitude_(magnitude) {}

  StateDefect defect() const noexcept { return defect_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  StateDefect defect_;
  double magnitude_;
};

}  // namespace esd
