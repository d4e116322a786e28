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

/*
 * esdsim C API.
 *
 * Two-qubit open-system dynamics under independent amplitude and phase
 * noise: Kraus and master-equation evolution, concurrence, sudden-death
 * times and decay-class diagrams.
 *
 * Objects are opaque handles created by esd_*_create / esd_state_from_*
 * and released with the matching *_free. Every fallible call returns an
 * esd_status; on failure esd_last_error() describes the cause for the
 * calling thread until its next failing call.
 *
 * Basis ordering is [++, +-, -+, --] for two qubits and [+, -] for one,
 * with |+> the excited state and qubit A the left tensor factor.
 */
#ifndef ESD_ESD_H_
#define ESD_ESD_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(ESD_BUILDING_LIBRARY)
#define ESD_API __declspec(dllexport)
#else
#define ESD_API __declspec(dllimport)
#endif
#else
#define ESD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum esd_status {
  ESD_OK = 0,
  ESD_ERR_INVALID_ARGUMENT = 1,
  ESD_ERR_INVALID_STATE = 2,
  ESD_ERR_NUMERICAL = 3,
  ESD_ERR_SEPARABLE = 4,
  ESD_ERR_BUFFER_TOO_SMALL = 5,
  ESD_ERR_INTERNAL = 6
} esd_status;

typedef enum esd_qubit { ESD_QUBIT_A = 0, ESD_QUBIT_B = 1 } esd_qubit;

typedef enum esd_noise_kind { ESD_NOISE_AMPLITUDE = 0, ESD_NOISE_PHASE = 1 } esd_noise_kind;

typedef enum esd_decay_class {
  ESD_CLASS_SEPARABLE_AT_START = 0,
  ESD_CLASS_EXPONENTIAL = 1,
  ESD_CLASS_SUDDEN_DEATH = 2,
  ESD_CLASS_INVALID = 3
} esd_decay_class;

/* Diagram panels over the (a, |z|) slice: amplitude only, phase only, both. */
typedef enum esd_panel { ESD_PANEL_AMPLITUDE = 0, ESD_PANEL_PHASE = 1, ESD_PANEL_COMBINED = 2 } esd_panel;

typedef struct esd_state esd_state;
typedef struct esd_noise_set esd_noise_set;
typedef struct esd_validation esd_validation;

typedef struct esd_decay {
  esd_decay_class decay_class;
  int has_t_star;
  double t_star;
} esd_decay;

typedef struct esd_diagram_cell {
  double a;
  double z;
  esd_decay decay;
} esd_diagram_cell;

typedef struct esd_additivity_row {
  double t;
  double kraus;
  double lindblad;
  double analytic;
} esd_additivity_row;

typedef struct esd_additivity_summary {
  double max_dev_kraus;
  double max_dev_lindblad;
  int pass;
} esd_additivity_summary;

typedef struct esd_validate_options {
  double amplitude_omega_perturbation;
  int drop_combined_normalization;
} esd_validate_options;

ESD_API const char* esd_version(void);
ESD_API const char* esd_last_error(void);
ESD_API const char* esd_status_string(esd_status status);
ESD_API const char* esd_decay_class_name(esd_decay_class decay_class);

/* ---- states ---- */

/* X state with populations a, b, c, d and coherence z between +- and -+. */
ESD_API esd_status esd_state_from_x(double a, double b, double c, double d, double z_re, double z_im,
                                    esd_state** out);
/* (1/9) [[1,0,0,0],[0,4,l,0],[0,l,4,0],[0,0,0,0]], 0 < lambda <= 4. */
ESD_API esd_status esd_state_from_lambda(double lambda, esd_state** out);
/* Row-major real and imaginary parts of a 2x2 (n_qubits = 1) or 4x4 matrix. */
ESD_API esd_status esd_state_from_matrix(int n_qubits, const double* re, const double* im, esd_state** out);
ESD_API void esd_state_free(esd_state* state);
ESD_API int esd_state_qubits(const esd_state* state);
/* Copies dim*dim entries into re/im; capacity counts entries per array. */
ESD_API esd_status esd_state_matrix(const esd_state* state, double* re, double* im, size_t capacity);
ESD_API esd_status esd_state_concurrence(const esd_state* state, double* out);

/* ---- noise ---- */

ESD_API esd_status esd_noise_set_create(esd_noise_set** out);
ESD_API void esd_noise_set_free(esd_noise_set* set);
ESD_API esd_status esd_noise_set_add(esd_noise_set* set, esd_qubit target, esd_noise_kind kind, double rate);
ESD_API size_t esd_noise_set_size(const esd_noise_set* set);
/* 20 / smallest positive rate (20 when the set is silent). */
ESD_API double esd_noise_set_default_t_max(const esd_noise_set* set);

/* ---- dynamics ---- */

ESD_API esd_status esd_evolve_kraus(const esd_state* state, const esd_noise_set* noise, double t,
                                    esd_state** out);
ESD_API esd_status esd_evolve_lindblad(const esd_state* state, const esd_noise_set* noise, double t, double dt,
                                       esd_state** out);
/* values[i] = concurrence at times[i]; times ascending and >= 0. */
ESD_API esd_status esd_trace(const esd_state* state, const esd_noise_set* noise, const double* times, size_t n,
                             double* values);

/* Sudden-death search in (0, t_max]; t_max <= 0 selects the default.
 * Returns ESD_ERR_SEPARABLE for an initially separable state. */
ESD_API esd_status esd_find_esd(const esd_state* state, const esd_noise_set* noise, double t_max,
                                esd_decay* out);
/* Like esd_find_esd but reports separable inputs as a class instead of an error. */
ESD_API esd_status esd_classify(const esd_state* state, const esd_noise_set* noise, double t_max,
                                esd_decay* out);

/* resolution x resolution cells over a in [0,1], |z| in [0,1/2], rates 1.
 * Cells are a-major. *count receives resolution^2 even when capacity is short. */
ESD_API esd_status esd_diagram(esd_panel panel, int resolution, double t_max, unsigned workers,
                               esd_diagram_cell* cells, size_t capacity, size_t* count);

ESD_API esd_status esd_additivity(double gamma1, double gamma2, const double* times, size_t n, double dt,
                                  esd_additivity_row* rows, esd_additivity_summary* summary);

/* ---- validation suite ---- */

/* options may be NULL. */
ESD_API esd_status esd_validate(const esd_validate_options* options, esd_validation** out);
ESD_API void esd_validation_free(esd_validation* report);
ESD_API size_t esd_validation_count(const esd_validation* report);
ESD_API const char* esd_validation_name(const esd_validation* report, size_t index);
ESD_API const char* esd_validation_detail(const esd_validation* report, size_t index);
ESD_API double esd_validation_worst(const esd_validation* report, size_t index);
ESD_API double esd_validation_tolerance(const esd_validation* report, size_t index);
ESD_API int esd_validation_passed(const esd_validation* report, size_t index);
ESD_API int esd_validation_all_passed(const esd_validation* report);

#ifdef __cplusplus
}
#endif

#endif /* ESD_ESD_H_ */
