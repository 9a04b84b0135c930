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

#pragma once

// Observables, variances and the linearized phase-sensitivity estimate
//   delta_phi = Delta A / |d<A>/d phi|.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "rosetta/error.hpp"
#include "rosetta/fock.hpp"
#include "rosetta/qubits.hpp"

namespace rosetta::estimation {

using fock::Complex;
using fock::FockState;
using qubits::QubitRegister;

enum class ObservableKind {
  kJx,
  kJy,
  kJz,
  kJsquared,
  kNumberDiff,  // n_0 - n_1
  kNumberSum,
  kModeNumber,
  kAN,           // |0,N><N,0| + h.c. (two-mode) or |1..1><0..0| + h.c. (register)
  kCollectiveA,  // sum over qubits of |0><1| + |1><0|
};

struct Observable {
  ObservableKind kind;
  std::size_t mode = 0;  // kModeNumber only

  static Observable jx() { return {ObservableKind::kJx}; }
  static Observable jy() { return {ObservableKind::kJy}; }
  static Observable jz() { return {ObservableKind::kJz}; }
  static Observable j_squared() { return {ObservableKind::kJsquared}; }
  static Observable number_diff() { return {ObservableKind::kNumberDiff}; }
  static Observable number_sum() { return {ObservableKind::kNumberSum}; }
  static Observable mode_number(std::size_t mode) { return {ObservableKind::kModeNumber, mode}; }
  static Observable an() { return {ObservableKind::kAN}; }
  static Observable collective_a() { return {ObservableKind::kCollectiveA}; }
};

std::string to_string(ObservableKind kind);

/// `copies` independent qubits, each in `single` (a one-qubit register).
struct SeparableQubits {
  QubitRegister single;
  std::size_t copies;
};

/// O|ket> for a Fock-space observable; the result need not be normalized.
FockState::Amplitudes apply_observable(const FockState& ket, const Observable& obs);

/// <bra|O|ket>. Exposed so hermiticity can be checked directly.
Complex matrix_element(const FockState& bra, const Observable& obs, const FockState& ket);

double expectation(const FockState& state, const Observable& obs);
double expectation(const QubitRegister& reg, const Observable& obs);
double expectation(const SeparableQubits& state, const Observable& obs);

/// <O^2> - <O>^2, clamped at zero.
double variance(const FockState& state, const Observable& obs);
double variance(const QubitRegister& reg, const Observable& obs);
double variance(const SeparableQubits& state, const Observable& obs);

// Jz eigenbasis |j = N/2, m> = |N/2 + m, N/2 - m>.

/// Equal weight on all N+1 Jz eigenstates; phases[k] (optional) applied to
/// the ket with k photons in mode 1.
FockState uniform_jz_state(int n, std::span<const double> phases = {});
/// (|m = N/2> + e^{i phi} |m = -N/2>)/sqrt(2).
FockState extreme_jz_state(int n, double phi = 0.0);
/// Amplitudes sqrt(C(N,k) / 2^N).
FockState binomial_jz_state(int n);

struct VarianceEntry {
  double variance = 0.0;  // (Delta Jz)^2
  double delta_jz = 0.0;
  double delta_q = 0.0;   // 1 / (2 Delta Jz), the equality case of Delta Q Delta Jz >= 1/2
};

struct VarianceCatalog {
  int photons = 0;
  VarianceEntry uniform;
  VarianceEntry extreme;
  VarianceEntry binomial;
};

VarianceCatalog variance_catalog(int n);

inline constexpr double kDefaultStep = 1e-5;
inline constexpr double kDivergenceTolerance = 1e-9;

struct SensitivityReport {
  double phi = 0.0;
  double expectation = 0.0;
  double std_dev = 0.0;
  double derivative = 0.0;
  double delta_phi = std::numeric_limits<double>::infinity();
  bool divergent = true;
};

/// delta_phi = std_dev / |derivative|, or divergent when |derivative| < kDivergenceTolerance.
SensitivityReport make_report(double phi, double expectation, double variance, double derivative);

/// Central-difference sensitivity of `obs` along the state family phi -> family(phi).
template <class Family>
SensitivityReport sensitivity(Family&& family, const Observable& obs, double phi, double dphi = kDefaultStep) {
  if (!(dphi > 0.0 && dphi <= 0.1)) fail(ErrorCode::kInvalidArgument, "finite-difference step must lie in (0, 0.1]");
  const auto state = family(phi);
  const double plus = expectation(family(phi + dphi), obs);
  const double minus = expectation(family(phi - dphi), obs);
  return make_report(phi, expectation(state, obs), variance(state, obs), (plus - minus) / (2.0 * dphi));
}

/// Same, with a caller-supplied analytic derivative of <obs>.
template <class Family, class Derivative>
SensitivityReport sensitivity_analytic(Family&& family, const Observable& obs, double phi, Derivative&& derivative) {
  const auto state = family(phi);
  return make_report(phi, expectation(state, obs), variance(state, obs), derivative(phi));
}

/// Interferometer configurations with a fixed detection observable:
///   kSeparable  N qubits (|0> + e^{i phi}|1>)/sqrt(2), collective A
///   kGhz        GHZ register, phase phi on every qubit, A_N
///   kNoon       NOON state, phase phi on mode 1, A_N
///   kYurke, kDualFock, kSingleFock   Mach-Zehnder with Jz detection on the
///               Yurke state, |N,N>, and |N,0>
enum class Scheme { kSeparable, kGhz, kNoon, kYurke, kDualFock, kSingleFock };

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme scheme);

SensitivityReport scheme_sensitivity(Scheme scheme, int n, double phi, double dphi = kDefaultStep);
std::vector<SensitivityReport> sensitivity_scan(Scheme scheme, int n, std::span<const double> phi_grid,
                                                double dphi = kDefaultStep);

struct UncertaintyCheck {
  double lhs = 0.0;  // Delta Jx Delta Jy
  double rhs = 0.0;  // |<Jz>| / 2
  bool satisfied = false;
};

/// Minimum-uncertainty test. Fails when the Robertson bound itself is
/// violated, which would indicate a broken state.
UncertaintyCheck intelligent_state_check(const FockState& state);

}  // namespace rosetta::estimation
