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

// Monte Carlo detection: Born-rule sampling of outcomes, method-of-moments
// phase estimates over repeated trials, and log-log scaling fits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rosetta/fock.hpp"
#include "rosetta/qubits.hpp"

namespace rosetta::sampling {

/// Counter-based stream: draw i is splitmix64(key + i * golden gamma). Any
/// (seed, scheme, N, repetition, trial) tuple maps to an independent stream,
/// so results do not depend on scheduling.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : key_(key) {}

  static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t scheme, std::uint64_t n, std::uint64_t repetition,
                                  std::uint64_t trial);

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

enum class MeasurementKind {
  kQubitComputational,  // values = bit per qubit, qubit 0 first
  kModeCounts,          // values = photon count per mode
  kANBinary,            // values = {+1} or {-1}: eigenvalue of A_N
};

struct Outcome {
  MeasurementKind kind;
  std::vector<int> values;
  bool operator==(const Outcome&) const = default;
};

/// Outcome table and cumulative Born probabilities for one state and
/// measurement. Build once, draw many times.
class BornSampler {
 public:
  BornSampler(const fock::FockState& state, MeasurementKind kind);
  BornSampler(const qubits::QubitRegister& reg, MeasurementKind kind);

  const Outcome& draw(RandomStream& stream) const;
  std::size_t draw_index(RandomStream& stream) const;

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const std::vector<double>& probabilities() const { return probabilities_; }

 private:
  void finish();

  std::vector<Outcome> outcomes_;
  std::vector<double> probabilities_;
  std::vector<double> cumulative_;
};

/// Fails on states whose norm differs from 1 by more than 1e-10.
Outcome sample_outcome(const fock::FockState& state, MeasurementKind kind, RandomStream& stream);
Outcome sample_outcome(const qubits::QubitRegister& reg, MeasurementKind kind, RandomStream& stream);

enum class SchemeKind {
  kSeparableQubits,  // N qubits per trial, A = sigma_x on each
  kSingleFockMz,     // |N,0> through a Mach-Zehnder, (n_1 - n_0)/N per trial
  kNoon,             // NOON state with phase on mode 1, A_N per trial
};

SchemeKind parse_scheme_kind(const std::string& name);
std::string to_string(SchemeKind scheme);

struct TrialConfig {
  double true_phi = 0.0;
  int trials = 100;
  int repetitions = 10000;
  std::uint64_t seed = 1;
  SchemeKind scheme = SchemeKind::kSeparableQubits;
  int photons = 1;
  unsigned workers = 0;  // 0: hardware concurrency
};

/// Maximum-slope point: pi/2, or pi/(2N) for NOON.
double operating_point(SchemeKind scheme, int n);

struct PhaseEstimate {
  double phi_hat = 0.0;     // mean estimate over repetitions
  double raw_std = 0.0;     // standard deviation of the estimates
  double delta_phi = 0.0;   // raw_std * sqrt(trials): uncertainty per trial
  std::size_t saturated = 0;  // repetitions whose sample mean hit +-1
  double saturated_fraction = 0.0;
  bool misconfigured = false;  // saturated_fraction >= 1%
};

/// Per repetition: average the fringe observable over `trials` outcomes,
/// invert with arccos (divided by N for NOON).
PhaseEstimate estimate_phase(const TrialConfig& config);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

/// Ordinary least squares y = intercept + slope x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

struct ScalingResult {
  std::vector<int> n_values;
  std::vector<double> delta_phi_empirical;
  double fitted_exponent = 0.0;
  double exponent_stderr = 0.0;
};

/// Runs estimate_phase at the operating point of each N (config.true_phi and
/// config.photons are overridden) and fits log delta_phi against log N.
/// Needs at least four distinct N with max/min >= 8.
ScalingResult scaling_experiment(SchemeKind scheme, std::span<const int> n_values, const TrialConfig& config);

}  // namespace rosetta::sampling
