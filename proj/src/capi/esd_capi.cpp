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

#include "esd/esd.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "channels.hpp"
#include "entanglement.hpp"
#include "validation.hpp"

struct esd_state {
  esd::DensityMatrix rho;
};

struct esd_noise_set {
  esd::NoiseSet specs;
};

struct esd_validation {
  esd::ValidationReport report;
};

namespace {

thread_local std::string g_last_error;

esd_status fail(esd_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Maps the core exception hierarchy onto status codes.
template <typename Body>
esd_status guarded(Body&& body) {
  try {
    body();
    return ESD_OK;
  } catch (const esd::SeparableInitialState& e) {
    return fail(ESD_ERR_SEPARABLE, e.what());
  } catch (const esd::InvalidState& e) {
    return fail(ESD_ERR_INVALID_STATE, e.what());
  } catch (const esd::InvalidArgument& e) {
    return fail(ESD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const esd::NumericalFailure& e) {
    return fail(ESD_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ESD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ESD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ESD_ERR_INTERNAL, "unknown error");
  }
}

esd_decay to_c(const esd::DecayClass& d) {
  esd_decay out{};
  switch (d.kind) {
    case esd::DecayKind::kSeparableAtStart: out.decay_class = ESD_CLASS_SEPARABLE_AT_START; break;
    case esd::DecayKind::kExponential: out.decay_class = ESD_CLASS_EXPONENTIAL; break;
    case esd::DecayKind::kSuddenDeath: out.decay_class = ESD_CLASS_SUDDEN_DEATH; break;
    case esd::DecayKind::kInvalid: out.decay_class = ESD_CLASS_INVALID; break;
  }
  out.has_t_star = d.t_star.has_value();
  out.t_star = d.t_star.value_or(0.0);
  return out;
}

double resolve_t_max(double t_max, const esd::NoiseSet& specs) {
  return t_max > 0.0 ? t_max : esd::default_t_max(specs);
}

esd::NoiseSet panel_noise(esd_panel panel) {
  esd::NoiseSet specs;
  for (esd::Qubit q : {esd::Qubit::kA, esd::Qubit::kB}) {
    if (panel == ESD_PANEL_AMPLITUDE || panel == ESD_PANEL_COMBINED)
      specs.push_back({q, esd::NoiseKind::kAmplitude, 1.0});
    if (panel == ESD_PANEL_PHASE || panel == ESD_PANEL_COMBINED) specs.push_back({q, esd::NoiseKind::kPhase, 1.0});
  }
  return specs;
}

bool valid_index(const esd_validation* report, size_t index) {
  return report != nullptr && index < report->report.checks.size();
}

}  // namespace

extern "C" {

const char* esd_version(void) { return "0.1.0"; }

const char* esd_last_error(void) { return g_last_error.c_str(); }

const char* esd_status_string(esd_status status) {
  switch (status) {
    case ESD_OK: return "ok";
    case ESD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ESD_ERR_INVALID_STATE: return "invalid state";
    case ESD_ERR_NUMERICAL: return "numerical failure";
    case ESD_ERR_SEPARABLE: return "separable initial state";
    case ESD_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case ESD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* esd_decay_class_name(esd_decay_class decay_class) {
  switch (decay_class) {
    case ESD_CLASS_SEPARABLE_AT_START: return "SEPARABLE_AT_START";
    case ESD_CLASS_EXPONENTIAL: return "EXPONENTIAL";
    case ESD_CLASS_SUDDEN_DEATH: return "SUDDEN_DEATH";
    case ESD_CLASS_INVALID: return "INVALID";
  }
  return "UNKNOWN";
}

esd_status esd_state_from_x(double a, double b, double c, double d, double z_re, double z_im, esd_state** out) {
  if (out == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const esd::XState x = esd::XState::make(a, b, c, d, {z_re, z_im});
    *out = new esd_state{x.density()};
  });
}

esd_status esd_state_from_lambda(double lambda, esd_state** out) {
  if (out == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = new esd_state{esd::XState::lambda_family(lambda).density()}; });
}

esd_status esd_state_from_matrix(int n_qubits, const double* re, const double* im, esd_state** out) {
  if (out == nullptr || re == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (n_qubits != 1 && n_qubits != 2) return fail(ESD_ERR_INVALID_ARGUMENT, "n_qubits must be 1 or 2");
  return guarded([&] {
    esd::ComplexMat m(n_qubits == 1 ? 2 : 4);
    for (int k = 0; k < m.size(); ++k) m.entries()[k] = {re[k], im != nullptr ? im[k] : 0.0};
    *out = new esd_state{esd::DensityMatrix::validate(m)};
  });
}

void esd_state_free(esd_state* state) { delete state; }

int esd_state_qubits(const esd_state* state) { return state != nullptr ? state->rho.n_qubits() : 0; }

esd_status esd_state_matrix(const esd_state* state, double* re, double* im, size_t capacity) {
  if (state == nullptr || re == nullptr || im == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null pointer argument");
  const auto entries = state->rho.mat().entries();
  if (capacity < entries.size()) return fail(ESD_ERR_BUFFER_TOO_SMALL, "matrix buffer too small");
  for (size_t k = 0; k < entries.size(); ++k) {
    re[k] = entries[k].real();
    im[k] = entries[k].imag();
  }
  return ESD_OK;
}

esd_status esd_state_concurrence(const esd_state* state, double* out) {
  if (state == nullptr || out == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] { *out = esd::concurrence(state->rho); });
}

esd_status esd_noise_set_create(esd_noise_set** out) {
  if (out == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = new esd_noise_set{}; });
}

void esd_noise_set_free(esd_noise_set* set) { delete set; }

esd_status esd_noise_set_add(esd_noise_set* set, esd_qubit target, esd_noise_kind kind, double rate) {
  if (set == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null noise set");
  if (target != ESD_QUBIT_A && target != ESD_QUBIT_B) return fail(ESD_ERR_INVALID_ARGUMENT, "unknown qubit");
  if (kind != ESD_NOISE_AMPLITUDE && kind != ESD_NOISE_PHASE) return fail(ESD_ERR_INVALID_ARGUMENT, "unknown noise kind");
  return guarded([&] {
    const esd::NoiseSpec spec{target == ESD_QUBIT_A ? esd::Qubit::kA : esd::Qubit::kB,
                              kind == ESD_NOISE_AMPLITUDE ? esd::NoiseKind::kAmplitude : esd::NoiseKind::kPhase,
                              rate};
    spec.check();
    set->specs.push_back(spec);
  });
}

size_t esd_noise_set_size(const esd_noise_set* set) { return set != nullptr ? set->specs.size() : 0; }

double esd_noise_set_default_t_max(const esd_noise_set* set) {
  return set != nullptr ? esd::default_t_max(set->specs) : 20.0;
}

esd_status esd_evolve_kraus(const esd_state* state, const esd_noise_set* noise, double t, esd_state** out) {
  if (state == nullptr || noise == nullptr || out == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] { *out = new esd_state{esd::evolve(state->rho, noise->specs, t)}; });
}

esd_status esd_evolve_lindblad(const esd_state* state, const esd_noise_set* noise, double t, double dt,
                               esd_state** out) {
  if (state == nullptr || noise == nullptr || out == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] { *out = new esd_state{esd::integrate(state->rho, noise->specs, t, dt)}; });
}

esd_status esd_trace(const esd_state* state, const esd_noise_set* noise, const double* times, size_t n,
                     double* values) {
  if (state == nullptr || noise == nullptr || (n > 0 && (times == nullptr || values == nullptr)))
    return fail(ESD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    const auto trace = esd::trace_concurrence(state->rho, noise->specs, {times, n});
    for (size_t i = 0; i < n; ++i) values[i] = trace.values[i];
  });
}

esd_status esd_find_esd(const esd_state* state, const esd_noise_set* noise, double t_max, esd_decay* out) {
  if (state == nullptr || noise == nullptr || out == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    const auto t_star = esd::esd_time(state->rho, noise->specs, resolve_t_max(t_max, noise->specs));
    *out = to_c(t_star ? esd::DecayClass{esd::DecayKind::kSuddenDeath, t_star}
                       : esd::DecayClass{esd::DecayKind::kExponential, std::nullopt});
  });
}

esd_status esd_classify(const esd_state* state, const esd_noise_set* noise, double t_max, esd_decay* out) {
  if (state == nullptr || noise == nullptr || out == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    *out = to_c(esd::classify_decay(state->rho, noise->specs, resolve_t_max(t_max, noise->specs)));
  });
}

esd_status esd_diagram(esd_panel panel, int resolution, double t_max, unsigned workers, esd_diagram_cell* cells,
                       size_t capacity, size_t* count) {
  if (panel != ESD_PANEL_AMPLITUDE && panel != ESD_PANEL_PHASE && panel != ESD_PANEL_COMBINED)
    return fail(ESD_ERR_INVALID_ARGUMENT, "unknown diagram panel");
  if (resolution < 2) return fail(ESD_ERR_INVALID_ARGUMENT, "diagram resolution must be >= 2");
  const size_t needed = static_cast<size_t>(resolution) * static_cast<size_t>(resolution);
  if (count != nullptr) *count = needed;
  if (cells == nullptr || capacity < needed) return fail(ESD_ERR_BUFFER_TOO_SMALL, "diagram buffer too small");
  return guarded([&] {
    const esd::NoiseSet specs = panel_noise(panel);
    esd::DiagramGrid grid;
    grid.a_points = resolution;
    grid.z_points = resolution;
    const auto result = esd::diagram(grid, specs, resolve_t_max(t_max, specs), workers);
    for (size_t k = 0; k < result.size(); ++k) cells[k] = {result[k].a, result[k].z, to_c(result[k].decay)};
  });
}

esd_status esd_additivity(double gamma1, double gamma2, const double* times, size_t n, double dt,
                          esd_additivity_row* rows, esd_additivity_summary* summary) {
  if ((n > 0 && (times == nullptr || rows == nullptr)) || summary == nullptr)
    return fail(ESD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    const auto report = esd::additivity(gamma1, gamma2, {times, n}, dt);
    for (size_t i = 0; i < n; ++i) {
      const auto& r = report.rows[i];
      rows[i] = {r.t, r.kraus, r.lindblad, r.analytic};
    }
    *summary = {report.max_dev_kraus, report.max_dev_lindblad, report.pass ? 1 : 0};
  });
}

esd_status esd_validate(const esd_validate_options* options, esd_validation** out) {
  if (out == nullptr) return fail(ESD_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    esd::ValidationOptions opts;
    if (options != nullptr) {
      opts.amplitude_omega_perturbation = options->amplitude_omega_perturbation;
      opts.drop_combined_normalization = options->drop_combined_normalization != 0;
    }
    *out = new esd_validation{esd::run_validation(opts)};
  });
}

void esd_validation_free(esd_validation* report) { delete report; }

size_t esd_validation_count(const esd_validation* report) {
  return report != nullptr ? report->report.checks.size() : 0;
}

const char* esd_validation_name(const esd_validation* report, size_t index) {
  return valid_index(report, index) ? report->report.checks[index].name.c_str() : nullptr;
}

const char* esd_validation_detail(const esd_validation* report, size_t index) {
  return valid_index(report, index) ? report->report.checks[index].detail.c_str() : nullptr;
}

double esd_validation_worst(const esd_validation* report, size_t index) {
  return valid_index(report, index) ? report->report.checks[index].worst : NAN;
}

double esd_validation_tolerance(const esd_validation* report, size_t index) {
  return valid_index(report, index) ? report->report.checks[index].tolerance : NAN;
}

int esd_validation_passed(const esd_validation* report, size_t index) {
  return valid_index(report, index) && report->report.checks[index].passed ? 1 : 0;
}

int esd_validation_all_passed(const esd_validation* report) {
  return report != nullptr && report->report.all_passed() ? 1 : 0;
}

}  // extern "C"
