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

#include "entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

namespace esd {
namespace {

const ComplexMat& spin_flip() {
  static const ComplexMat yy = kron(pauli::sigma_y(), pauli::sigma_y());
  return yy;
}

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw InvalidArgument("concurrence needs a two-qubit state");
}

DensityMatrix state_at(const DensityMatrix& rho0, std::span<const NoiseSpec> specs, double t) {
  return evolve(rho0, specs, t);
}

bool disentangled_at(const DensityMatrix& rho0, std::span<const NoiseSpec> specs, double t) {
  return is_disentangled(state_at(rho0, specs, t));
}

// Dead on a verification grid of eight points in (t_star, 2 t_star].
bool stays_disentangled(const DensityMatrix& rho0, std::span<const NoiseSpec> specs, double t_star) {
  for (int k = 1; k <= 8; ++k) {
    if (!disentangled_at(rho0, specs, t_star * (1.0 + k / 8.0))) return false;
  }
  return true;
}

}  // namespace

XState XState::make(double a, double b, double c, double d, cplx z) {
  for (double p : {a, b, c, d, z.real(), z.imag()}) {
    if (!std::isfinite(p)) throw InvalidArgument("X state parameters must be finite");
  }
  if (a < 0.0 || b < 0.0 || c < 0.0 || d < 0.0) {
    throw InvalidArgument("X state populations must be nonnegative");
  }
  if (std::abs(a + b + c + d - 1.0) > 1e-12) {
    throw InvalidArgument("X state populations must sum to 1, got " + std::to_string(a + b + c + d));
  }
  if (std::abs(z) > std::sqrt(b * c) + 1e-12) {
    throw InvalidArgument("X state coherence exceeds sqrt(bc): not positive semidefinite");
  }
  return XState{a, b, c, d, z};
}

XState XState::lambda_family(double lambda) {
  if (!(lambda > 0.0 && lambda <= 4.0)) {
    throw InvalidArgument("lambda must lie in (0, 4], got " + std::to_string(lambda));
  }
  return XState{1.0 / 9.0, 4.0 / 9.0, 4.0 / 9.0, 0.0, lambda / 9.0};
}

ComplexMat XState::matrix() const {
  ComplexMat m(4);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  m(1, 2) = z;
  m(2, 1) = std::conj(z);
  return m;
}

DensityMatrix XState::density() const { return DensityMatrix::validate(matrix()); }

std::optional<XState> as_xstate(const ComplexMat& m) {
  if (m.dim() != 4) return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || (i == 1 && j == 2) || (i == 2 && j == 1)) continue;
      if (m(i, j) != cplx{}) return std::nullopt;
    }
  }
  return XState{m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(), m(1, 2)};
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const ComplexMat& yy = spin_flip();
  const ComplexMat flipped = yy * conjugate(rho.mat()) * yy;
  const auto spectrum = product_spectrum(rho.mat() * flipped);
  const double c = std::sqrt(spectrum[0]) - std::sqrt(spectrum[1]) - std::sqrt(spectrum[2]) -
                   std::sqrt(spectrum[3]);
  return std::max(0.0, c);
}

double concurrence_x(const XState& x) {
  return 2.0 * std::max(0.0, std::abs(x.z) - std::sqrt(std::max(0.0, x.a * x.d)));
}

double fast_concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho);
  if (const auto x = as_xstate(rho.mat())) return concurrence_x(*x);
  return concurrence(rho);
}

ConcurrenceTrace trace_concurrence(const DensityMatrix& rho0, std::span<const NoiseSpec> specs,
                                   std::span<const double> times) {
  require_two_qubits(rho0);
  for (size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || (i > 0 && times[i] < times[i - 1])) {
      throw InvalidArgument("trace times must be ascending and >= 0");
    }
  }
  ConcurrenceTrace out;
  out.times.assign(times.begin(), times.end());
  out.specs.assign(specs.begin(), specs.end());
  out.initial = rho0.mat();
  out.values.reserve(times.size());
  for (double t : times) out.values.push_back(fast_concurrence(state_at(rho0, specs, t)));
  return out;
}

const char* to_string(DecayKind kind) {
  switch (kind) {
    case DecayKind::kSeparableAtStart: return "SEPARABLE_AT_START";
    case DecayKind::kExponential: return "EXPONENTIAL";
    case DecayKind::kSuddenDeath: return "SUDDEN_DEATH";
    case DecayKind::kInvalid: return "INVALID";
  }
  return "UNKNOWN";
}

double default_t_max(std::span<const NoiseSpec> specs) {
  double slowest = std::numeric_limits<double>::infinity();
  for (const NoiseSpec& s : specs) {
    if (s.rate > 0.0) slowest = std::min(slowest, s.rate);
  }
  return std::isfinite(slowest) ? 20.0 / slowest : 20.0;
}

bool is_disentangled(const DensityMatrix& rho) {
  require_two_qubits(rho);
  // Past sudden death |z| < sqrt(ad) strictly, so the closed form is exactly 0.
  if (const auto x = as_xstate(rho.mat())) return concurrence_x(*x) == 0.0;
  return concurrence(rho) <= kEsdThreshold;
}

std::optional<double> esd_time(const DensityMatrix& rho0, std::span<const NoiseSpec> specs, double t_max) {
  require_two_qubits(rho0);
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidArgument("t_max must be finite and > 0");
  if (is_disentangled(rho0)) throw SeparableInitialState();

  double alive = 0.0;
  for (int i = 1; i <= kEsdScanPoints; ++i) {
    const double t = t_max * i / kEsdScanPoints;
    if (!disentangled_at(rho0, specs, t)) {
      alive = t;
      continue;
    }
    double lo = alive;
    double hi = t;
    while (hi - lo > kEsdResolution) {
      const double mid = 0.5 * (lo + hi);
      (disentangled_at(rho0, specs, mid) ? hi : lo) = mid;
    }
    if (stays_disentangled(rho0, specs, hi)) return hi;
    // A numerical graze, not an absorbing zero: keep scanning.
    alive = t;
  }
  return std::nullopt;
}

DecayClass classify_decay(const DensityMatrix& rho0, std::span<const NoiseSpec> specs, double t_max) {
  require_two_qubits(rho0);
  if (is_disentangled(rho0)) return {DecayKind::kSeparableAtStart, std::nullopt};
  if (const auto t_star = esd_time(rho0, specs, t_max)) return {DecayKind::kSuddenDeath, t_star};
  return {DecayKind::kExponential, std::nullopt};
}

DecayClass classify(const XState& x, std::span<const NoiseSpec> specs, double t_max) {
  if (x.d != 0.0) throw InvalidArgument("classification is defined on the d = 0 slice");
  return classify_decay(x.density(), specs, t_max);
}

double DiagramGrid::a_at(int i) const { return a_points == 1 ? a_min : a_min + i * a_step(); }
double DiagramGrid::z_at(int j) const { return z_points == 1 ? z_min : z_min + j * z_step(); }

std::vector<DiagramCell> diagram(const DiagramGrid& grid, std::span<const NoiseSpec> specs, double t_max,
                                 unsigned workers) {
  if (grid.a_points < 1 || grid.z_points < 1) throw InvalidArgument("diagram grid must be non-empty");
  std::vector<DiagramCell> cells(static_cast<size_t>(grid.a_points) * grid.z_points);

  auto fill_row = [&](int i) {
    const double a = grid.a_at(i);
    for (int j = 0; j < grid.z_points; ++j) {
      DiagramCell& cell = cells[static_cast<size_t>(i) * grid.z_points + j];
      cell.a = a;
      cell.z = grid.z_at(j);
      const double half = 0.5 * (1.0 - a);
      if (a < 0.0 || a > 1.0 || cell.z < 0.0 || cell.z > half + 1e-12) {
        cell.decay = {DecayKind::kInvalid, std::nullopt};
        continue;
      }
      const XState x{a, half, half, 0.0, std::min(cell.z, half)};
      cell.decay = classify(x, specs, t_max);
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(grid.a_points)));
  if (workers == 1) {
    for (int i = 0; i < grid.a_points; ++i) fill_row(i);
    return cells;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = static_cast<int>(w); i < grid.a_points; i += static_cast<int>(workers)) fill_row(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return cells;
}

}  // namespace esd
