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

// Single- and two-qubit noise channels in Kraus form, plus the Born-Markov
// master equation they solve.
//
// Amplitude noise at rate G1 relaxes the excited population as exp(-G1 t)
// and the qubit coherence as exp(-G1 t / 2), on one qubit or on either
// qubit of a pair.
//
// Phase noise carries a context-dependent rate. On a single-qubit system a
// rate G2 decays the coherence as exp(-G2 t), the generator being
// (G2/2)(sz rho sz - rho). On a two-qubit system G2 is the per-qubit rate of
// the pair Kraus form diag(g, 1), diag(0, w) with g = exp(-G2 t / 2), so each
// qubit's coherence decays as exp(-G2 t / 2) and a coherence shared by both
// qubits as exp(-G2 t).

#include <span>
#include <utility>
#include <vector>

#include "qmat.hpp"

namespace esd {

enum class NoiseKind { kAmplitude, kPhase };

/// One independent Markovian noise source acting on one qubit.
struct NoiseSpec {
  Qubit target = Qubit::kA;
  NoiseKind kind = NoiseKind::kPhase;
  double rate = 0.0;

  /// Throws InvalidArgument for negative or non-finite rates.
  void check() const;

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

using NoiseSet = std::vector<NoiseSpec>;

/// Finite Kraus set. Completeness is not enforced at construction so that
/// defective sets can be measured; `apply` refuses them.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMat> ops);

  static KrausChannel identity(int dim);

  int dim() const noexcept { return dim_; }
  const std::vector<ComplexMat>& ops() const noexcept { return ops_; }

  /// sum_k K rho K^dagger with no completeness or positivity checks.
  ComplexMat map(const ComplexMat& rho) const;

 private:
  int dim_;
  std::vector<ComplexMat> ops_;
};

struct DephasingFactors {
  double gamma;
  double omega;
};

/// gamma = exp(-rate t / 2), omega = sqrt(1 - gamma^2).
DephasingFactors dephasing_factors(double rate, double t);

/// {diag(gamma, 1), diag(0, omega)}; multiplies the coherence by gamma.
KrausChannel dephasing_channel(double rate, double t);

/// {diag(gamma, 1), omega |-><+|} with gamma = exp(-rate t / 2).
KrausChannel amplitude_channel(double rate, double t);

/// All Kronecker pairs K_i (x) L_j; channel A acts on the left factor.
KrausChannel lift(const KrausChannel& on_a, const KrausChannel& on_b);

/// Kraus set of `then` after `first`: {L_j K_i}.
KrausChannel compose(const KrausChannel& first, const KrausChannel& then);

/// max |sum K^dagger K - I|.
double completeness_defect(const KrausChannel& ch);

/// Applies a complete channel and revalidates the output.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Kraus parameter to hand to dephasing_channel for a phase rate on a system
/// of `n_qubits` (see the header comment).
double phase_kraus_rate(double rate, int n_qubits);

/// Evolution channel at time t for a set of simultaneous noises on an
/// `n_qubits` system. Per qubit the channels are composed (they commute);
/// for two qubits the per-qubit channels are lifted.
KrausChannel noise_channel(std::span<const NoiseSpec> specs, int n_qubits, double t);

/// Kraus-path evolution: apply(noise_channel(specs, n, t), rho).
DensityMatrix evolve(const DensityMatrix& rho, std::span<const NoiseSpec> specs, double t);

/// Right-hand side of the master equation, lifted per target qubit.
ComplexMat lindblad_rhs(const ComplexMat& rho, std::span<const NoiseSpec> specs);
inline ComplexMat lindblad_rhs(const DensityMatrix& rho, std::span<const NoiseSpec> specs) {
  return lindblad_rhs(rho.mat(), specs);
}

inline constexpr double kDefaultStep = 1e-4;

/// Fixed-step RK4 solution of the master equation at time t. The result is
/// revalidated with positivity tolerance 1e-8; failure raises NumericalFailure.
DensityMatrix integrate(const DensityMatrix& rho0, std::span<const NoiseSpec> specs, double t,
                        double dt = kDefaultStep);

}  // namespace esd
