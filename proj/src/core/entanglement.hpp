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
#include <span>
#include <vector>

#include "channels.hpp"
#include "qmat.hpp"

namespace esd {

/// Two-qubit state with populations a, b, c, d on [++, +-, -+, --] and a
/// single coherence z between +- and -+. All other entries vanish.
struct XState {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  cplx z{};

  /// Checks populations sum to one and |z| <= sqrt(bc); throws InvalidArgument.
  static XState make(double a, double b, double c, double d, cplx z);

  /// The one-parameter family (1/9) [[1,0,0,0],[0,4,l,0],[0,l,4,0],[0,0,0,0]].
  /// Requires 0 < lambda <= 4.
  static XState lambda_family(double lambda);

  ComplexMat matrix() const;
  DensityMatrix density() const;
};

/// Reads an X state out of a matrix whose off-X entries are exactly zero.
std::optional<XState> as_xstate(const ComplexMat& m);

/// Wootters concurrence through the spectrum of rho (sy x sy) rho* (sy x sy).
double concurrence(const DensityMatrix& rho);

/// 2 max{0, |z| - sqrt(ad)}.
double concurrence_x(const XState& x);

/// Closed form for X-shaped states, Wootters otherwise.
double fast_concurrence(const DensityMatrix& rho);

struct ConcurrenceTrace {
  std::vector<double> times;
  std::vector<double> values;
  NoiseSet specs;
  ComplexMat initial{4};
};

/// Concurrence of the Kraus-evolved state at every time, each evaluated from t = 0.
ConcurrenceTrace trace_concurrence(const DensityMatrix& rho0, std::span<const NoiseSpec> specs,
                                   std::span<const double> times);

enum class DecayKind { kSeparableAtStart, kExponential, kSuddenDeath, kInvalid };

const char* to_string(DecayKind kind);

struct DecayClass {
  DecayKind kind = DecayKind::kExponential;
  std::optional<double> t_star;
};

/// Raised when an entanglement-decay query starts from a separable state.
class SeparableInitialState : public InvalidArgument {
 public:
  SeparableInitialState() : InvalidArgument("initial state is separable (concurrence 0)") {}
};

/// 20 / (smallest positive rate); 20 when no noise is active.
double default_t_max(std::span<const NoiseSpec> specs);

inline constexpr int kEsdScanPoints = 512;
inline constexpr double kEsdResolution = 1e-10;
inline constexpr double kEsdThreshold = 1e-12;

/// True once the state carries no entanglement. X-shaped states are judged
/// by the exact sign of |z| - sqrt(ad); other states by C <= 1e-12.
bool is_disentangled(const DensityMatrix& rho);

/// Earliest time in (0, t_max] after which the state stays disentangled.
/// Coarse scan of 512 points, bisection to 1e-10, then eight verification
/// points up to 2 t*. Throws SeparableInitialState when C(0) = 0.
std::optional<double> esd_time(const DensityMatrix& rho0, std::span<const NoiseSpec> specs,
                               double t_max);

/// Decay class of an arbitrary two-qubit state.
DecayClass classify_decay(const DensityMatrix& rho0, std::span<const NoiseSpec> specs, double t_max);

/// Decay class on the d = 0 slice; throws InvalidArgument when d != 0.
DecayClass classify(const XState& x, std::span<const NoiseSpec> specs, double t_max);

/// (a, |z|) lattice over the slice b = c = (1 - a) / 2, d = 0, z real.
struct DiagramGrid {
  int a_points = 64;
  int z_points = 64;
  double a_min = 0.0;
  double a_max = 1.0;
  double z_min = 0.0;
  double z_max = 0.5;

  double a_at(int i) const;
  double z_at(int j) const;
  double a_step() const { return (a_max - a_min) / (a_points - 1); }
  double z_step() const { return (z_max - z_min) / (z_points - 1); }
};

struct DiagramCell {
  double a = 0.0;
  double z = 0.0;
  DecayClass decay;
};

/// Classifies every lattice point, a-major. Points with |z| > (1 - a) / 2 are
/// marked kInvalid. `workers` > 1 splits rows across threads; the output
/// order does not depend on it.
std::vector<DiagramCell> diagram(const DiagramGrid& grid, std::span<const NoiseSpec> specs, double t_max,
                                 unsigned workers = 1);

}  // namespace esd
