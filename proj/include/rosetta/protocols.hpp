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

// Named interferometer states, the Hong-Ou-Mandel entangler, lithographic
// deposition curves and the dual-Fock "peel-off" post-selection device.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "rosetta/fock.hpp"

namespace rosetta::protocols {

using fock::FockState;

enum class NamedState { kDualFock, kNoon, kYurke };

/// |N,N>; (|N,0> + |0,N>)/sqrt(2); (|(N+1)/2,(N-1)/2> + |(N-1)/2,(N+1)/2>)/sqrt(2).
/// N >= 1, and N odd for the Yurke state.
FockState make_named_state(NamedState kind, int n);
FockState dual_fock(int n);
FockState noon(int n);
FockState yurke(int n);

/// Balanced splitter, phase phi on mode 0, balanced splitter.
FockState mach_zehnder(const FockState& input, double phi);

/// Probability that a single photon entering mode 0 leaves the Mach-Zehnder
/// through mode 1.
double mach_zehnder_fringe(double phi);

/// Offset phi0 such that rosetta_fringe(phi + phi0) == mach_zehnder_fringe(phi),
/// fixed from the two fringes at phi = 0.
double calibrate_rosetta_offset();

struct RosettaComparison {
  std::vector<double> phi;
  std::vector<double> qubit_circuit;  // rosetta_fringe(phi)
  std::vector<double> mach_zehnder;   // mach_zehnder_fringe(phi - offset)
  double offset = 0.0;
  double max_abs_difference = 0.0;
};

/// Both fringes on `points` evenly spaced phases over [0, 2 pi].
RosettaComparison compare_rosetta(std::size_t points = 101);

/// Sends a two-mode state through the balanced splitter; default input |1,1>.
FockState hom_entangle();
FockState hom_entangle(const FockState& input);

inline constexpr std::size_t kDefaultPhasePoints = 721;

/// `points` evenly spaced values on [lo, hi], endpoints included.
std::vector<double> phase_grid(std::size_t points = kDefaultPhasePoints, double lo = 0.0, double hi = 6.283185307179586);

struct DepositionCurve {
  std::vector<double> phi_grid;
  std::vector<double> rate;
  std::vector<double> normalized_rate;  // rate / max(rate)
};

/// N-photon absorption rate |<0,0| (a e^{i phi} + b)^N |psi>|^2 on each grid point.
DepositionCurve deposition_rate(const FockState& state, std::span<const double> phi_grid);

/// Independent exposures multiply: the uncorrelated curve is the single
/// curve raised to `exposures`.
DepositionCurve uncorrelated_deposition(const DepositionCurve& single, int exposures);

// The helpers below treat the curve as one period sampled on [0, 2 pi] with
// the endpoint duplicated.

/// Fringe period from the first autocorrelation peak, refined by a parabola.
double fringe_period(const DepositionCurve& curve);

/// Phases of circular local maxima of the normalized curve.
std::vector<double> fringe_maxima(const DepositionCurve& curve);

// Peel-off device. Modes are ordered (a, b, u, v); after the recombining
// splitter acts on (u, v), slot 2 carries detector d and slot 3 detector c.
inline constexpr std::size_t kModeA = 0;
inline constexpr std::size_t kModeB = 1;
inline constexpr std::size_t kDetectorD = 2;
inline constexpr std::size_t kDetectorC = 3;

/// Four-mode state after all three splitters, before any detection.
FockState gizmo_output(int n, double r2);

struct PeelOffResult {
  FockState conditional_state;
  double success_probability = 0.0;
  double amplitude_A = 0.0;
  double reflectivity_r2 = 0.0;
};

/// Post-selects one photon in each detector.
PeelOffResult peel_off(int n, double r2);

/// (|N,N-2> + |N-2,N>)/sqrt(2), the state a two-fold coincidence leaves behind.
FockState peel_off_target(int n);

/// sqrt(N(N-1)/2) r2 (1 - r2)^(N-1).
double peel_off_amplitude_closed_form(int n, double r2);
double peel_off_probability_closed_form(int n, double r2);

struct OptimalReflectivity {
  double r2_star = 0.0;
  double probability_star = 0.0;
  bool grid_fallback = false;  // set when the sampled objective was not unimodal
};

/// Golden-section maximization of the simulated coincidence probability.
OptimalReflectivity optimal_reflectivity(int n);

struct DetectorBranch {
  std::array<int, 2> pattern{};  // counts on (c, d)
  FockState conditional_state;
  double probability = 0.0;
  double relative_phase = 0.0;  // arg <N-1,N|psi> - arg <N,N-1|psi>, wrapped to (-pi, pi]
};

/// Branches (1,0) and (0,1): exactly one photon at one detector.
std::vector<DetectorBranch> peel_off_single_detector(int n, double r2);

}  // namespace rosetta::protocols
