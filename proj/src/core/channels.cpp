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

#include "channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ode.hpp"

namespace esd {
namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidArgument("time must be finite and >= 0, got " + std::to_string(t));
  }
}

bool is_zero(const ComplexMat& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](const cplx& v) { return v == cplx{}; });
}

int qubit_count(int dim) { return dim == 2 ? 1 : 2; }

void require_target(const NoiseSpec& spec, int n_qubits) {
  spec.check();
  if (n_qubits == 1 && spec.target != Qubit::kA) {
    throw InvalidArgument("single-qubit systems only accept noise on qubit A");
  }
}

ComplexMat on_target(const ComplexMat& local, Qubit target, int n_qubits) {
  if (n_qubits == 1) return local;
  const ComplexMat id = ComplexMat::identity(2);
  return target == Qubit::kA ? kron(local, id) : kron(id, local);
}

KrausChannel local_channel(const NoiseSpec& spec, int n_qubits, double t) {
  if (spec.kind == NoiseKind::kAmplitude) return amplitude_channel(spec.rate, t);
  return dephasing_channel(phase_kraus_rate(spec.rate, n_qubits), t);
}

KrausChannel without_zero_ops(const KrausChannel& ch) {
  std::vector<ComplexMat> kept;
  kept.reserve(ch.ops().size());
  for (const ComplexMat& k : ch.ops()) {
    if (!is_zero(k)) kept.push_back(k);
  }
  if (kept.empty()) return ch;
  return KrausChannel(std::move(kept));
}

// Master-equation generator sum_k (L rho L^dag - {L^dag L, rho}/2).
struct Generator {
  std::vector<ComplexMat> jumps;
  std::vector<ComplexMat> jumps_dag;
  ComplexMat half_decay;

  Generator(std::span<const NoiseSpec> specs, int n_qubits)
      : half_decay(n_qubits == 1 ? 2 : 4) {
    for (const NoiseSpec& spec : specs) {
      require_target(spec, n_qubits);
      if (spec.rate == 0.0) continue;
      ComplexMat local = spec.kind == NoiseKind::kAmplitude
                             ? pauli::sigma_minus() * std::sqrt(spec.rate)
                             // kappa (sz rho sz - rho) with kappa = kraus_rate / 4
                             : pauli::sigma_z() * std::sqrt(phase_kraus_rate(spec.rate, n_qubits) / 4.0);
      ComplexMat jump = on_target(local, spec.target, n_qubits);
      ComplexMat jump_dag = dagger(jump);
      half_decay += (jump_dag * jump) * 0.5;
      jumps.push_back(jump);
      jumps_dag.push_back(jump_dag);
    }
  }

  ComplexMat operator()(const ComplexMat& rho) const {
    ComplexMat out = half_decay * rho + rho * half_decay;
    out *= -1.0;
    for (size_t k = 0; k < jumps.size(); ++k) out += jumps[k] * rho * jumps_dag[k];
    return out;
  }
};

}  // namespace

void NoiseSpec::check() const {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw InvalidArgument("noise rate must be finite and >= 0, got " + std::to_string(rate));
  }
}

KrausChannel::KrausChannel(std::vector<ComplexMat> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw InvalidArgument("Kraus channel needs at least one operator");
  dim_ = ops_.front().dim();
  for (const ComplexMat& k : ops_) {
    if (k.dim() != dim_) throw InvalidArgument("Kraus operators must share one dimension");
    if (!k.all_finite()) throw InvalidArgument("Kraus operator has non-finite entries");
  }
}

KrausChannel KrausChannel::identity(int dim) { return KrausChannel({ComplexMat::identity(dim)}); }

ComplexMat KrausChannel::map(const ComplexMat& rho) const {
  if (rho.dim() != dim_) {
    throw InvalidArgument("channel of dim " + std::to_string(dim_) + " applied to dim " +
                          std::to_string(rho.dim()));
  }
  ComplexMat out(dim_);
  for (const ComplexMat& k : ops_) out += k * rho * dagger(k);
  return out;
}

DephasingFactors dephasing_factors(double rate, double t) {
  require_time(t);
  NoiseSpec{Qubit::kA, NoiseKind::kPhase, rate}.check();
  const double gamma = std::exp(-0.5 * rate * t);
  // -expm1(-x) keeps omega accurate for small rate * t.
  const double omega = std::sqrt(-std::expm1(-rate * t));
  return {gamma, omega};
}

KrausChannel dephasing_channel(double rate, double t) {
  const auto [gamma, omega] = dephasing_factors(rate, t);
  return KrausChannel({ComplexMat::diagonal({gamma, 1.0}), ComplexMat::diagonal({omega, 0.0})});
}

KrausChannel amplitude_channel(double rate, double t) {
  const auto [gamma, omega] = dephasing_factors(rate, t);
  return KrausChannel({ComplexMat::diagonal({gamma, 1.0}), ComplexMat(2, {0.0, 0.0, omega, 0.0})});
}

KrausChannel lift(const KrausChannel& on_a, const KrausChannel& on_b) {
  if (on_a.dim() != 2 || on_b.dim() != 2) throw InvalidArgument("lift: both channels must be single-qubit");
  std::vector<ComplexMat> ops;
  ops.reserve(on_a.ops().size() * on_b.ops().size());
  for (const ComplexMat& k : on_a.ops())
    for (const ComplexMat& l : on_b.ops()) ops.push_back(kron(k, l));
  return KrausChannel(std::move(ops));
}

KrausChannel compose(const KrausChannel& first, const KrausChannel& then) {
  if (first.dim() != then.dim()) throw InvalidArgument("compose: dimension mismatch");
  std::vector<ComplexMat> ops;
  ops.reserve(first.ops().size() * then.ops().size());
  for (const ComplexMat& k : first.ops())
    for (const ComplexMat& l : then.ops()) ops.push_back(l * k);
  return KrausChannel(std::move(ops));
}

double completeness_defect(const KrausChannel& ch) {
  ComplexMat sum(ch.dim());
  for (const ComplexMat& k : ch.ops()) sum += dagger(k) * k;
  return max_abs_diff(sum, ComplexMat::identity(ch.dim()));
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) throw InvalidArgument("apply: channel and state dimensions differ");
  const double defect = completeness_defect(ch);
  if (defect > 1e-10) {
    throw InvalidArgument("apply: channel is not trace preserving (defect " + std::to_string(defect) + ")");
  }
  try {
    return DensityMatrix::validate(ch.map(rho.mat()));
  } catch (const InvalidState& e) {
    throw NumericalFailure(std::string("apply produced an invalid state: ") + e.what());
  }
}

double phase_kraus_rate(double rate, int n_qubits) { return n_qubits == 1 ? 2.0 * rate : rate; }

KrausChannel noise_channel(std::span<const NoiseSpec> specs, int n_qubits, double t) {
  if (n_qubits != 1 && n_qubits != 2) throw InvalidArgument("noise_channel: n_qubits must be 1 or 2");
  require_time(t);
  auto per_qubit = [&](Qubit q) {
    KrausChannel ch = KrausChannel::identity(2);
    for (const NoiseSpec& spec : specs) {
      require_target(spec, n_qubits);
      if (spec.target == q) ch = without_zero_ops(compose(ch, local_channel(spec, n_qubits, t)));
    }
    return ch;
  };
  if (n_qubits == 1) return per_qubit(Qubit::kA);
  return lift(per_qubit(Qubit::kA), per_qubit(Qubit::kB));
}

DensityMatrix evolve(const DensityMatrix& rho, std::span<const NoiseSpec> specs, double t) {
  return apply(noise_channel(specs, rho.n_qubits(), t), rho);
}

ComplexMat lindblad_rhs(const ComplexMat& rho, std::span<const NoiseSpec> specs) {
  return Generator(specs, qubit_count(rho.dim()))(rho);
}

DensityMatrix integrate(const DensityMatrix& rho0, std::span<const NoiseSpec> specs, double t, double dt) {
  require_time(t);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("integrate: step must be > 0");
  if (t == 0.0) return rho0;
  const Generator generator(specs, rho0.n_qubits());
  const ComplexMat out = ode::rk4_integrate(rho0.mat(), t, std::min(dt, t), generator);
  DensityTolerance tol;
  tol.positivity = 1e-8;
  try {
    return DensityMatrix::validate(out, tol);
  } catch (const InvalidState& e) {
    throw NumericalFailure(std::string("integration drifted out of the state space: ") + e.what());
  }
}

}  // namespace esd
