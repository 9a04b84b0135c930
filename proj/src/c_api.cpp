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

#include "rosetta_sim.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iterator>
#include <new>
#include <span>
#include <string>

#include "rosetta/error.hpp"
#include "rosetta/estimation.hpp"
#include "rosetta/fock.hpp"
#include "rosetta/protocols.hpp"
#include "rosetta/qubits.hpp"
#include "rosetta/sampling.hpp"

struct rsim_fock_state {
  rosetta::fock::FockState state;
};

struct rsim_qubit_register {
  rosetta::qubits::QubitRegister reg;
};

namespace {

using namespace rosetta;

thread_local std::string g_last_error;

rsim_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return RSIM_ERR_INVALID_ARGUMENT;
    case ErrorCode::kOutOfRange: return RSIM_ERR_OUT_OF_RANGE;
    case ErrorCode::kCapacityExceeded: return RSIM_ERR_CAPACITY;
    case ErrorCode::kDomain: return RSIM_ERR_DOMAIN;
  }
  return RSIM_ERR_INTERNAL;
}

rsim_status set_error(rsim_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
rsim_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return RSIM_OK;
  } catch (const Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(RSIM_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(RSIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(RSIM_ERR_INTERNAL, "unknown failure");
  }
}


estimation::Observable to_observable(rsim_observable obs, std::size_t mode) {
  switch (obs) {
    case RSIM_OBS_JX: return estimation::Observable::jx();
    case RSIM_OBS_JY: return estimation::Observable::jy();
    case RSIM_OBS_JZ: return estimation::Observable::jz();
    case RSIM_OBS_JSQUARED: return estimation::Observable::j_squared();
    case RSIM_OBS_NUMBER_DIFF: return estimation::Observable::number_diff();
    case RSIM_OBS_NUMBER_SUM: return estimation::Observable::number_sum();
    case RSIM_OBS_MODE_NUMBER: return estimation::Observable::mode_number(mode);
    case RSIM_OBS_AN: return estimation::Observable::an();
  }
  fail(ErrorCode::kInvalidArgument, "unknown observable");
}

estimation::Scheme to_scheme(rsim_scheme scheme) {
  switch (scheme) {
    case RSIM_SCHEME_SEPARABLE: return estimation::Scheme::kSeparable;
    case RSIM_SCHEME_GHZ: return estimation::Scheme::kGhz;
    case RSIM_SCHEME_NOON: return estimation::Scheme::kNoon;
    case RSIM_SCHEME_YURKE: return estimation::Scheme::kYurke;
    case RSIM_SCHEME_DUAL_FOCK: return estimation::Scheme::kDualFock;
    case RSIM_SCHEME_SINGLE_FOCK: return estimation::Scheme::kSingleFock;
  }
  fail(ErrorCode::kInvalidArgument, "unknown scheme");
}

sampling::SchemeKind to_sampling_scheme(rsim_sampling_scheme scheme) {
  switch (scheme) {
    case RSIM_SAMPLING_SEPARABLE: return sampling::SchemeKind::kSeparableQubits;
    case RSIM_SAMPLING_SINGLE_FOCK: return sampling::SchemeKind::kSingleFockMz;
    case RSIM_SAMPLING_NOON: return sampling::SchemeKind::kNoon;
  }
  fail(ErrorCode::kInvalidArgument, "unknown sampling scheme");
}

sampling::TrialConfig to_config(const rsim_trial_config& c) {
  sampling::TrialConfig config;
  config.true_phi = c.true_phi;
  config.trials = c.trials;
  config.repetitions = c.repetitions;
  config.seed = c.seed;
  config.scheme = to_sampling_scheme(c.scheme);
  config.photons = c.photons;
  config.workers = c.workers;
  return config;
}

rsim_sensitivity_report to_c(const estimation::SensitivityReport& r) {
  return {r.phi, r.expectation, r.std_dev, r.derivative, r.delta_phi, r.divergent ? 1 : 0};
}

rsim_variance_entry to_c(const estimation::VarianceEntry& e) { return {e.variance, e.delta_jz, e.delta_q}; }

rsim_fock_state* wrap(fock::FockState state) { return new rsim_fock_state{std::move(state)}; }

}  // namespace

extern "C" {

const char* rsim_version(void) { return "1.0.0"; }

const char* rsim_status_string(rsim_status status) {
  switch (status) {
    case RSIM_OK: return "ok";
    case RSIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RSIM_ERR_OUT_OF_RANGE: return "index out of range";
    case RSIM_ERR_CAPACITY: return "capacity exceeded";
    case RSIM_ERR_DOMAIN: return "domain error";
    case RSIM_ERR_NULL_POINTER: return "null pointer";
    case RSIM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case RSIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rsim_last_error(void) { return g_last_error.c_str(); }

rsim_status rsim_set_basis_cap(size_t cap) {
  return guarded([&] { fock::set_basis_cap(cap); });
}

size_t rsim_basis_cap(void) { return fock::basis_cap(); }

rsim_status rsim_fock_create(const int* occupations, size_t modes, rsim_fock_state** out) {
  if (occupations == nullptr || out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = wrap(fock::make_fock(std::span<const int>(occupations, modes))); });
}

rsim_status rsim_fock_named(rsim_named_state kind, int photons, rsim_fock_state** out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    protocols::NamedState named;
    switch (kind) {
      case RSIM_STATE_DUAL_FOCK: named = protocols::NamedState::kDualFock; break;
      case RSIM_STATE_NOON: named = protocols::NamedState::kNoon; break;
      case RSIM_STATE_YURKE: named = protocols::NamedState::kYurke; break;
      default: fail(ErrorCode::kInvalidArgument, "unknown named state");
    }
    *out = wrap(protocols::make_named_state(named, photons));
  });
}

rsim_status rsim_fock_clone(const rsim_fock_state* state, rsim_fock_state** out) {
  if (state == nullptr || out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = wrap(state->state); });
}

void rsim_fock_free(rsim_fock_state* state) { delete state; }

size_t rsim_fock_modes(const rsim_fock_state* state) { return state ? state->state.modes() : 0; }

int rsim_fock_total_photons(const rsim_fock_state* state) { return state ? state->state.total_photons() : 0; }

size_t rsim_fock_num_kets(const rsim_fock_state* state) { return state ? state->state.size() : 0; }

rsim_status rsim_fock_ket(const rsim_fock_state* state, size_t index, int* occupations, size_t capacity, double* re,
                          double* im) {
  if (state == nullptr || occupations == nullptr || re == nullptr || im == nullptr) {
    return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  }
  if (index >= state->state.size()) return set_error(RSIM_ERR_OUT_OF_RANGE, "ket index out of range");
  if (capacity < state->state.modes()) return set_error(RSIM_ERR_BUFFER_TOO_SMALL, "occupation buffer too small");
  auto it = state->state.amplitudes().begin();
  std::advance(it, static_cast<std::ptrdiff_t>(index));
  for (std::size_t m = 0; m < state->state.modes(); ++m) occupations[m] = it->first[m];
  *re = it->second.real();
  *im = it->second.imag();
  g_last_error.clear();
  return RSIM_OK;
}

rsim_status rsim_fock_beam_splitter(rsim_fock_state* state, double t, double r, size_t mode_a, size_t mode_b) {
  if (state == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    state->state = fock::apply_beam_splitter(state->state, fock::BeamSplitter(t, r), mode_a, mode_b);
  });
}

rsim_status rsim_fock_phase_shift(rsim_fock_state* state, size_t mode, double phi) {
  if (state == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { state->state = fock::apply_phase_shift(state->state, mode, phi); });
}

rsim_status rsim_fock_schwinger_rotation(rsim_fock_state* state, rsim_axis axis, double angle) {
  if (state == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    fock::Axis a;
    switch (axis) {
      case RSIM_AXIS_X: a = fock::Axis::kX; break;
      case RSIM_AXIS_Y: a = fock::Axis::kY; break;
      case RSIM_AXIS_Z: a = fock::Axis::kZ; break;
      default: fail(ErrorCode::kInvalidArgument, "unknown axis");
    }
    state->state = fock::schwinger_rotation(state->state, a, angle);
  });
}

rsim_status rsim_fock_project_counts(const rsim_fock_state* state, const size_t* modes, const int* counts,
                                     size_t count, rsim_fock_state** residual, double* probability) {
  if (state == nullptr || probability == nullptr || (count > 0 && (modes == nullptr || counts == nullptr))) {
    return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  }
  return guarded([&] {
    fock::Projection p = fock::project_counts(state->state, std::span<const std::size_t>(modes, count),
                                              std::span<const int>(counts, count));
    *probability = p.probability;
    if (residual != nullptr) *residual = wrap(std::move(p.residual));
  });
}

rsim_status rsim_fock_fidelity(const rsim_fock_state* a, const rsim_fock_state* b, double* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = fock::fidelity(a->state, b->state); });
}

rsim_status rsim_fock_expectation(const rsim_fock_state* state, rsim_observable obs, size_t mode, double* out) {
  if (state == nullptr || out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = estimation::expectation(state->state, to_observable(obs, mode)); });
}

rsim_status rsim_fock_variance(const rsim_fock_state* state, rsim_observable obs, size_t mode, double* out) {
  if (state == nullptr || out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = estimation::variance(state->state, to_observable(obs, mode)); });
}

rsim_status rsim_qubits_create(size_t qubits, rsim_qubit_register** out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = new rsim_qubit_register{qubits::QubitRegister(qubits)}; });
}

rsim_status rsim_qubits_ghz(size_t qubits, rsim_qubit_register** out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = new rsim_qubit_register{qubits::make_ghz(qubits)}; });
}

void rsim_qubits_free(rsim_qubit_register* reg) { delete reg; }

size_t rsim_qubits_count(const rsim_qubit_register* reg) { return reg ? reg->reg.num_qubits() : 0; }

rsim_status rsim_qubits_amplitude(const rsim_qubit_register* reg, size_t index, double* re, double* im) {
  if (reg == nullptr || re == nullptr || im == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  if (index >= reg->reg.amplitudes().size()) return set_error(RSIM_ERR_OUT_OF_RANGE, "amplitude index out of range");
  *re = reg->reg.amplitudes()[index].real();
  *im = reg->reg.amplitudes()[index].imag();
  g_last_error.clear();
  return RSIM_OK;
}

rsim_status rsim_qubits_hadamard(rsim_qubit_register* reg, size_t qubit) {
  if (reg == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { reg->reg = qubits::apply_gate(reg->reg, qubits::Hadamard{qubit}); });
}

rsim_status rsim_qubits_phase(rsim_qubit_register* reg, size_t qubit, double phi) {
  if (reg == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { reg->reg = qubits::apply_gate(reg->reg, qubits::Phase{qubit, phi}); });
}

rsim_status rsim_qubits_cnot(rsim_qubit_register* reg, size_t control, size_t target) {
  if (reg == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { reg->reg = qubits::apply_gate(reg->reg, qubits::Cnot{control, target}); });
}

rsim_status rsim_qubits_expect_an(const rsim_qubit_register* reg, double* out) {
  if (reg == nullptr || out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = qubits::expect_AN(reg->reg); });
}

rsim_status rsim_qubits_fidelity(const rsim_qubit_register* a, const rsim_qubit_register* b, double* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = qubits::fidelity(a->reg, b->reg); });
}

rsim_status rsim_rosetta_fringe(double phi, double* out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = qubits::rosetta_fringe(phi); });
}

rsim_status rsim_compute_variance_catalog(int photons, rsim_variance_catalog* out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const estimation::VarianceCatalog c = estimation::variance_catalog(photons);
    *out = {c.photons, to_c(c.uniform), to_c(c.extreme), to_c(c.binomial)};
  });
}

rsim_status rsim_sensitivity(rsim_scheme scheme, int photons, double phi, double dphi, rsim_sensitivity_report* out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return rsim_sensitivity_scan(scheme, photons, &phi, 1, dphi, out);
}

rsim_status rsim_sensitivity_scan(rsim_scheme scheme, int photons, const double* phi, size_t count, double dphi,
                                  rsim_sensitivity_report* out) {
  if (count > 0 && (phi == nullptr || out == nullptr)) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const double step = dphi > 0.0 ? dphi : estimation::kDefaultStep;
    const auto reports = estimation::sensitivity_scan(to_scheme(scheme), photons, std::span(phi, count), step);
    for (std::size_t i = 0; i < reports.size(); ++i) out[i] = to_c(reports[i]);
  });
}

rsim_status rsim_rosetta_compare(size_t points, double* phi, double* qubit_circuit, double* mach_zehnder,
                                 double* offset, double* max_abs_difference) {
  if (phi == nullptr || qubit_circuit == nullptr || mach_zehnder == nullptr || offset == nullptr ||
      max_abs_difference == nullptr) {
    return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  }
  return guarded([&] {
    const protocols::RosettaComparison c = protocols::compare_rosetta(points);
    std::copy(c.phi.begin(), c.phi.end(), phi);
    std::copy(c.qubit_circuit.begin(), c.qubit_circuit.end(), qubit_circuit);
    std::copy(c.mach_zehnder.begin(), c.mach_zehnder.end(), mach_zehnder);
    *offset = c.offset;
    *max_abs_difference = c.max_abs_difference;
  });
}

rsim_status rsim_hom_entangle(rsim_fock_state** out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = wrap(protocols::hom_entangle()); });
}

rsim_status rsim_phase_grid(size_t points, double lo, double hi, double* out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const std::vector<double> grid = protocols::phase_grid(points, lo, hi);
    std::copy(grid.begin(), grid.end(), out);
  });
}

rsim_status rsim_deposition_rate(const rsim_fock_state* state, const double* phi, size_t count, double* rate,
                                 double* normalized_rate) {
  if (state == nullptr || (count > 0 && phi == nullptr)) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const protocols::DepositionCurve curve = protocols::deposition_rate(state->state, std::span(phi, count));
    if (rate != nullptr) std::copy(curve.rate.begin(), curve.rate.end(), rate);
    if (normalized_rate != nullptr) std::copy(curve.normalized_rate.begin(), curve.normalized_rate.end(), normalized_rate);
  });
}

rsim_status rsim_fringe_analysis(const double* phi, const double* normalized_rate, size_t count, double* period,
                                 size_t* maxima) {
  if (phi == nullptr || normalized_rate == nullptr || period == nullptr || maxima == nullptr) {
    return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  }
  return guarded([&] {
    protocols::DepositionCurve curve;
    curve.phi_grid.assign(phi, phi + count);
    curve.normalized_rate.assign(normalized_rate, normalized_rate + count);
    curve.rate = curve.normalized_rate;
    *period = protocols::fringe_period(curve);
    *maxima = protocols::fringe_maxima(curve).size();
  });
}

rsim_status rsim_peel_off(int photons, double r2, rsim_peel_off_result* out, rsim_fock_state** conditional) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    protocols::PeelOffResult result = protocols::peel_off(photons, r2);
    *out = {photons,
            r2,
            result.success_probability,
            result.amplitude_A,
            protocols::peel_off_probability_closed_form(photons, r2),
            fock::fidelity(result.conditional_state, protocols::peel_off_target(photons))};
    if (conditional != nullptr) *conditional = wrap(std::move(result.conditional_state));
  });
}

rsim_status rsim_optimal_reflectivity_search(int photons, rsim_optimal_reflectivity* out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const protocols::OptimalReflectivity found = protocols::optimal_reflectivity(photons);
    const double analytic = 1.0 / photons;
    *out = {analytic, protocols::peel_off_probability_closed_form(photons, analytic), found.r2_star,
            found.probability_star, found.grid_fallback ? 1 : 0};
  });
}

rsim_status rsim_operating_point(rsim_sampling_scheme scheme, int photons, double* out) {
  if (out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = sampling::operating_point(to_sampling_scheme(scheme), photons); });
}

rsim_status rsim_estimate_phase(const rsim_trial_config* config, rsim_phase_estimate* out) {
  if (config == nullptr || out == nullptr) return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const sampling::PhaseEstimate e = sampling::estimate_phase(to_config(*config));
    *out = {e.phi_hat, e.raw_std, e.delta_phi, e.saturated_fraction, e.saturated, e.misconfigured ? 1 : 0};
  });
}

rsim_status rsim_scaling_experiment(rsim_sampling_scheme scheme, const int* photons, size_t count,
                                    const rsim_trial_config* config, double* delta_phi, double* exponent,
                                    double* exponent_stderr) {
  if (photons == nullptr || config == nullptr || delta_phi == nullptr || exponent == nullptr ||
      exponent_stderr == nullptr) {
    return set_error(RSIM_ERR_NULL_POINTER, "null pointer argument");
  }
  return guarded([&] {
    rsim_trial_config c = *config;
    c.scheme = scheme;
    const sampling::ScalingResult r =
        sampling::scaling_experiment(to_sampling_scheme(scheme), std::span(photons, count), to_config(c));
    std::copy(r.delta_phi_empirical.begin(), r.delta_phi_empirical.end(), delta_phi);
    *exponent = r.fitted_exponent;
    *exponent_stderr = r.exponent_stderr;
  });
}

}  // extern "C"
