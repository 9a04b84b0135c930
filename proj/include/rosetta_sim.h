// Copyright 2026 The rosetta-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the rosetta-sim interferometry simulator.
 *
 * Every fallible call returns an rsim_status; on failure a message for the
 * calling thread is available from rsim_last_error(). States are opaque
 * handles owned by the caller and released with the matching *_free call.
 * Transformations act in place; projections allocate a new handle. */

#ifndef ROSETTA_SIM_H_
#define ROSETTA_SIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ROSETTA_SIM_BUILDING)
#define RSIM_API __declspec(dllexport)
#else
#define RSIM_API __declspec(dllimport)
#endif
#else
#define RSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsim_status {
  RSIM_OK = 0,
  RSIM_ERR_INVALID_ARGUMENT = 1,
  RSIM_ERR_OUT_OF_RANGE = 2,
  RSIM_ERR_CAPACITY = 3,
  RSIM_ERR_DOMAIN = 4,
  RSIM_ERR_NULL_POINTER = 5,
  RSIM_ERR_BUFFER_TOO_SMALL = 6,
  RSIM_ERR_INTERNAL = 7
} rsim_status;

typedef struct rsim_fock_state rsim_fock_state;
typedef struct rsim_qubit_register rsim_qubit_register;

typedef enum rsim_axis { RSIM_AXIS_X = 0, RSIM_AXIS_Y = 1, RSIM_AXIS_Z = 2 } rsim_axis;

typedef enum rsim_named_state {
  RSIM_STATE_DUAL_FOCK = 0,
  RSIM_STATE_NOON = 1,
  RSIM_STATE_YURKE = 2
} rsim_named_state;

typedef enum rsim_observable {
  RSIM_OBS_JX = 0,
  RSIM_OBS_JY = 1,
  RSIM_OBS_JZ = 2,
  RSIM_OBS_JSQUARED = 3,
  RSIM_OBS_NUMBER_DIFF = 4,
  RSIM_OBS_NUMBER_SUM = 5,
  RSIM_OBS_MODE_NUMBER = 6,
  RSIM_OBS_AN = 7
} rsim_observable;

typedef enum rsim_scheme {
  RSIM_SCHEME_SEPARABLE = 0,
  RSIM_SCHEME_GHZ = 1,
  RSIM_SCHEME_NOON = 2,
  RSIM_SCHEME_YURKE = 3,
  RSIM_SCHEME_DUAL_FOCK = 4,
  RSIM_SCHEME_SINGLE_FOCK = 5
} rsim_scheme;

typedef enum rsim_sampling_scheme {
  RSIM_SAMPLING_SEPARABLE = 0,
  RSIM_SAMPLING_SINGLE_FOCK = 1,
  RSIM_SAMPLING_NOON = 2
} rsim_sampling_scheme;

/* ---- library ---------------------------------------------------------- */

RSIM_API const char* rsim_version(void);
RSIM_API const char* rsim_status_string(rsim_status status);
/* Message describing the last failure on this thread; empty after success. */
RSIM_API const char* rsim_last_error(void);

/* Largest number of basis kets a Fock state may span (default 2000000). */
RSIM_API rsim_status rsim_set_basis_cap(size_t cap);
RSIM_API size_t rsim_basis_cap(void);

/* ---- Fock states ------------------------------------------------------ */

RSIM_API rsim_status rsim_fock_create(const int* occupations, size_t modes, rsim_fock_state** out);
RSIM_API rsim_status rsim_fock_named(rsim_named_state kind, int photons, rsim_fock_state** out);
RSIM_API rsim_status rsim_fock_clone(const rsim_fock_state* state, rsim_fock_state** out);
RSIM_API void rsim_fock_free(rsim_fock_state* state);

RSIM_API size_t rsim_fock_modes(const rsim_fock_state* state);
RSIM_API int rsim_fock_total_photons(const rsim_fock_state* state);
RSIM_API size_t rsim_fock_num_kets(const rsim_fock_state* state);
/* Kets are ordered lexicographically by occupation vector. `occupations`
 * receives rsim_fock_modes() entries. */
RSIM_API rsim_status rsim_fock_ket(const rsim_fock_state* state, size_t index, int* occupations, size_t capacity,
                                   double* re, double* im);

RSIM_API rsim_status rsim_fock_beam_splitter(rsim_fock_state* state, double t, double r, size_t mode_a,
                                             size_t mode_b);
RSIM_API rsim_status rsim_fock_phase_shift(rsim_fock_state* state, size_t mode, double phi);
RSIM_API rsim_status rsim_fock_schwinger_rotation(rsim_fock_state* state, rsim_axis axis, double angle);
/* `residual` may be NULL when only the probability is wanted. */
RSIM_API rsim_status rsim_fock_project_counts(const rsim_fock_state* state, const size_t* modes, const int* counts,
                                              size_t count, rsim_fock_state** residual, double* probability);
RSIM_API rsim_status rsim_fock_fidelity(const rsim_fock_state* a, const rsim_fock_state* b, double* out);
/* `mode` is only read for RSIM_OBS_MODE_NUMBER. */
RSIM_API rsim_status rsim_fock_expectation(const rsim_fock_state* state, rsim_observable obs, size_t mode,
                                           double* out);
RSIM_API rsim_status rsim_fock_variance(const rsim_fock_state* state, rsim_observable obs, size_t mode, double* out);

/* ---- qubit registers -------------------------------------------------- */

RSIM_API rsim_status rsim_qubits_create(size_t qubits, rsim_qubit_register** out);
RSIM_API rsim_status rsim_qubits_ghz(size_t qubits, rsim_qubit_register** out);
RSIM_API void rsim_qubits_free(rsim_qubit_register* reg);
RSIM_API size_t rsim_qubits_count(const rsim_qubit_register* reg);
/* Qubit 0 is the most significant bit of `index`. */
RSIM_API rsim_status rsim_qubits_amplitude(const rsim_qubit_register* reg, size_t index, double* re, double* im);
RSIM_API rsim_status rsim_qubits_hadamard(rsim_qubit_register* reg, size_t qubit);
RSIM_API rsim_status rsim_qubits_phase(rsim_qubit_register* reg, size_t qubit, double phi);
RSIM_API rsim_status rsim_qubits_cnot(rsim_qubit_register* reg, size_t control, size_t target);
RSIM_API rsim_status rsim_qubits_expect_an(const rsim_qubit_register* reg, double* out);
RSIM_API rsim_status rsim_qubits_fidelity(const rsim_qubit_register* a, const rsim_qubit_register* b, double* out);

/* P(1) of the Hadamard-phase-Hadamard circuit on |0>. */
RSIM_API rsim_status rsim_rosetta_fringe(double phi, double* out);

/* ---- estimation ------------------------------------------------------- */

typedef struct rsim_variance_entry {
  double variance;
  double delta_jz;
  double delta_q;
} rsim_variance_entry;

typedef struct rsim_variance_catalog {
  int photons;
  rsim_variance_entry uniform;
  rsim_variance_entry extreme;
  rsim_variance_entry binomial;
} rsim_variance_catalog;

RSIM_API rsim_status rsim_compute_variance_catalog(int photons, rsim_variance_catalog* out);

typedef struct rsim_sensitivity_report {
  double phi;
  double expectation;
  double std_dev;
  double derivative;
  double delta_phi; /* +inf when divergent */
  int divergent;
} rsim_sensitivity_report;

/* dphi <= 0 selects the default central-difference step (1e-5). */
RSIM_API rsim_status rsim_sensitivity(rsim_scheme scheme, int photons, double phi, double dphi,
                                      rsim_sensitivity_report* out);
RSIM_API rsim_status rsim_sensitivity_scan(rsim_scheme scheme, int photons, const double* phi, size_t count,
                                           double dphi, rsim_sensitivity_report* out);

/* ---- protocols -------------------------------------------------------- */

/* All arrays hold `points` entries over [0, 2 pi]. `mach_zehnder` is
 * evaluated at phi - offset. */
RSIM_API rsim_status rsim_rosetta_compare(size_t points, double* phi, double* qubit_circuit, double* mach_zehnder,
                                          double* offset, double* max_abs_difference);

RSIM_API rsim_status rsim_hom_entangle(rsim_fock_state** out);

RSIM_API rsim_status rsim_phase_grid(size_t points, double lo, double hi, double* out);
/* `rate` and `normalized_rate` may each be NULL. */
RSIM_API rsim_status rsim_deposition_rate(const rsim_fock_state* state, const double* phi, size_t count, double* rate,
                                          double* normalized_rate);
/* Period and number of maxima of a normalized curve sampled over one period. */
RSIM_API rsim_status rsim_fringe_analysis(const double* phi, const double* normalized_rate, size_t count,
                                          double* period, size_t* maxima);

typedef struct rsim_peel_off_result {
  int photons;
  double reflectivity_r2;
  double success_probability;
  double amplitude_A;
  double closed_form_probability;
  double residual_fidelity; /* against (|N,N-2> + |N-2,N>)/sqrt(2) */
} rsim_peel_off_result;

/* `conditional` may be NULL. */
RSIM_API rsim_status rsim_peel_off(int photons, double r2, rsim_peel_off_result* out, rsim_fock_state** conditional);

typedef struct rsim_optimal_reflectivity {
  double analytic_r2;
  double analytic_probability;
  double numeric_r2;
  double numeric_probability;
  int grid_fallback;
} rsim_optimal_reflectivity;

RSIM_API rsim_status rsim_optimal_reflectivity_search(int photons, rsim_optimal_reflectivity* out);

/* ---- sampling --------------------------------------------------------- */

typedef struct rsim_trial_config {
  double true_phi;
  int trials;
  int repetitions;
  uint64_t seed;
  rsim_sampling_scheme scheme;
  int photons;
  unsigned workers; /* 0: hardware concurrency */
} rsim_trial_config;

typedef struct rsim_phase_estimate {
  double phi_hat;
  double raw_std;
  double delta_phi;
  double saturated_fraction;
  size_t saturated;
  int misconfigured;
} rsim_phase_estimate;

RSIM_API rsim_status rsim_operating_point(rsim_sampling_scheme scheme, int photons, double* out);
RSIM_API rsim_status rsim_estimate_phase(const rsim_trial_config* config, rsim_phase_estimate* out);
/* `delta_phi` receives `count` entries. `config->true_phi`, `scheme` and
 * `photons` are ignored. */
RSIM_API rsim_status rsim_scaling_experiment(rsim_sampling_scheme scheme, const int* photons, size_t count,
                                             const rsim_trial_config* config, double* delta_phi, double* exponent,
                                             double* exponent_stderr);

#ifdef __cplusplus
}
#endif

#endif /* ROSETTA_SIM_H_ */
