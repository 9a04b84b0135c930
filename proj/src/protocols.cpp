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

#include "rosetta/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "combinatorics.hpp"
#include "rosetta/error.hpp"
#include "rosetta/golden_section.hpp"
#include "rosetta/qubits.hpp"

namespace rosetta::protocols {
namespace {

using fock::BeamSplitter;
using fock::OccupationVector;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_photons(int n, int minimum, const char* what) {
  if (n < minimum) fail(ErrorCode::kInvalidArgument, std::string(what) + " needs N >= " + std::to_string(minimum));
}

void require_open_unit(double r2) {
  if (!(r2 > 0.0 && r2 < 1.0)) fail(ErrorCode::kInvalidArgument, "reflectivity r2 must lie in (0, 1)");
}

double wrap_phase(double angle) {
  angle = std::remainder(angle, kTwoPi);
  return angle <= -std::numbers::pi ? angle + kTwoPi : angle;
}

// Samples per period when the grid repeats its first point at +2 pi.
std::size_t periodic_length(const std::vector<double>& grid) {
  if (grid.size() > 2 && std::abs(grid.back() - grid.front() - kTwoPi) < 1e-9) return grid.size() - 1;
  return grid.size();
}

}  // namespace

FockState make_named_state(NamedState kind, int n) {
  switch (kind) {
    case NamedState::kDualFock:
      require_photons(n, 1, "dual Fock state");
      return fock::make_fock({n, n});
    case NamedState::kNoon:
      require_photons(n, 1, "NOON state");
      return FockState::from_amplitudes(2, {{OccupationVector{n, 0}, 1.0}, {OccupationVector{0, n}, 1.0}});
    case NamedState::kYurke:
      require_photons(n, 1, "Yurke state");
      if (n % 2 == 0) fail(ErrorCode::kInvalidArgument, "Yurke state needs an odd total photon number");
      return FockState::from_amplitudes(
          2, {{OccupationVector{(n + 1) / 2, (n - 1) / 2}, 1.0}, {OccupationVector{(n - 1) / 2, (n + 1) / 2}, 1.0}});
  }
  fail(ErrorCode::kInvalidArgument, "unknown named state");
}

FockState dual_fock(int n) { return make_named_state(NamedState::kDualFock, n); }
FockState noon(int n) { return make_named_state(NamedState::kNoon, n); }
FockState yurke(int n) { return make_named_state(NamedState::kYurke, n); }

FockState mach_zehnder(const FockState& input, double phi) {
  if (input.modes() != 2) fail(ErrorCode::kInvalidArgument, "Mach-Zehnder needs a two-mode state");
  const BeamSplitter bs = BeamSplitter::balanced();
  FockState state = fock::apply_beam_splitter(input, bs, 0, 1);
  state = fock::apply_phase_shift(state, 0, phi);
  return fock::apply_beam_splitter(state, bs, 0, 1);
}

double mach_zehnder_fringe(double phi) {
  return std::norm(mach_zehnder(fock::make_fock({1, 0}), phi).amplitude(OccupationVector{0, 1}));
}

double calibrate_rosetta_offset() {
  // The qubit fringe is (1 - cos phi)/2; match it to the Mach-Zehnder value at 0.
  const double p = std::clamp(mach_zehnder_fringe(0.0), 0.0, 1.0);
  return std::acos(std::clamp(1.0 - 2.0 * p, -1.0, 1.0));
}

RosettaComparison compare_rosetta(std::size_t points) {
  if (points < 2) fail(ErrorCode::kInvalidArgument, "Rosetta comparison needs at least two phase points");
  RosettaComparison out;
  out.offset = calibrate_rosetta_offset();
  out.phi = phase_grid(points);
  for (double phi : out.phi) {
    out.qubit_circuit.push_back(qubits::rosetta_fringe(phi));
    out.mach_zehnder.push_back(mach_zehnder_fringe(phi - out.offset));
    out.max_abs_difference = std::max(out.max_abs_difference, std::abs(out.qubit_circuit.back() - out.mach_zehnder.back()));
  }
  return out;
}

FockState hom_entangle() { return hom_entangle(fock::make_fock({1, 1})); }

FockState hom_entangle(const FockState& input) {
  if (input.modes() != 2) fail(ErrorCode::kInvalidArgument, "HOM entangler needs a two-mode state");
  return fock::apply_beam_splitter(input, BeamSplitter::balanced(), 0, 1);
}

std::vector<double> phase_grid(std::size_t points, double lo, double hi) {
  if (points < 2) fail(ErrorCode::kInvalidArgument, "a phase grid needs at least two points");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

DepositionCurve deposition_rate(const FockState& state, std::span<const double> phi_grid) {
  if (state.modes() != 2) fail(ErrorCode::kInvalidArgument, "deposition needs a two-mode state");
  const int n = state.total_photons();
  if (n < 1 || state.empty()) fail(ErrorCode::kInvalidArgument, "deposition needs a definite photon number N >= 1");

  // <0,0| a^k b^(N-k) C(N,k) |k, N-k> = sqrt(N! C(N,k)). The weights are
  // scaled by their largest value so the normalized curve survives large N.
  auto log_weight = [n](int k) {
    return 0.5 * (2.0 * detail::log_factorial(n) - detail::log_factorial(k) - detail::log_factorial(n - k));
  };
  double log_scale = -std::numeric_limits<double>::infinity();
  for (const auto& kv : state.amplitudes()) log_scale = std::max(log_scale, log_weight(kv.first[0]));
  std::vector<std::pair<int, fock::Complex>> terms;
  for (const auto& [ket, amp] : state.amplitudes()) {
    terms.emplace_back(ket[0], std::exp(log_weight(ket[0]) - log_scale) * amp);
  }

  DepositionCurve curve;
  curve.phi_grid.assign(phi_grid.begin(), phi_grid.end());
  std::vector<double> scaled;
  scaled.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    fock::Complex sum{};
    for (const auto& [k, c] : terms) sum += std::polar(1.0, k * phi) * c;
    scaled.push_back(std::norm(sum));
  }
  const double factor = std::exp(2.0 * log_scale);
  curve.rate.reserve(scaled.size());
  for (double v : scaled) curve.rate.push_back(v * factor);
  const double peak = scaled.empty() ? 0.0 : *std::max_element(scaled.begin(), scaled.end());
  curve.normalized_rate = scaled;
  if (peak > 0.0) {
    for (double& v : curve.normalized_rate) v /= peak;
  }
  return curve;
}

DepositionCurve uncorrelated_deposition(const DepositionCurve& single, int exposures) {
  if (exposures < 1) fail(ErrorCode::kInvalidArgument, "need at least one exposure");
  DepositionCurve out = single;
  for (double& v : out.rate) v = std::pow(v, exposures);
  for (double& v : out.normalized_rate) v = std::pow(v, exposures);
  return out;
}

double fringe_period(const DepositionCurve& curve) {
  const std::size_t m = periodic_length(curve.phi_grid);
  if (m < 3) fail(ErrorCode::kInvalidArgument, "curve too short for a period estimate");
  const double step = curve.phi_grid[1] - curve.phi_grid[0];
  double mean = 0.0;
  for (std::size_t i = 0; i < m; ++i) mean += curve.normalized_rate[i];
  mean /= static_cast<double>(m);

  std::vector<double> ac(m, 0.0);
  for (std::size_t lag = 0; lag < m; ++lag) {
    for (std::size_t i = 0; i < m; ++i) {
      ac[lag] += (curve.normalized_rate[i] - mean) * (curve.normalized_rate[(i + lag) % m] - mean);
    }
  }
  for (std::size_t lag = 1; lag + 1 < m; ++lag) {
    if (ac[lag] > 0.0 && ac[lag] >= ac[lag - 1] && ac[lag] > ac[lag + 1]) {
      const double denom = ac[lag - 1] - 2.0 * ac[lag] + ac[lag + 1];
      const double shift = denom != 0.0 ? 0.5 * (ac[lag - 1] - ac[lag + 1]) / denom : 0.0;
      return (static_cast<double>(lag) + shift) * step;
    }
  }
  return static_cast<double>(m) * step;
}

std::vector<double> fringe_maxima(const DepositionCurve& curve) {
  const std::size_t m = periodic_length(curve.phi_grid);
  std::vector<double> maxima;
  if (m < 3) return maxima;
  const auto& r = curve.normalized_rate;
  for (std::size_t i = 0; i < m; ++i) {
    const double prev = r[(i + m - 1) % m];
    const double next = r[(i + 1) % m];
    if (r[i] > prev && r[i] >= next) maxima.push_back(curve.phi_grid[i]);
  }
  return maxima;
}

FockState gizmo_output(int n, double r2) {
  require_photons(n, 1, "peel-off device");
  require_open_unit(r2);
  const BeamSplitter tap = BeamSplitter::from_reflectivity(r2);
  FockState state = fock::make_fock({n, n, 0, 0});
  state = fock::apply_beam_splitter(state, tap, kModeA, 2);
  state = fock::apply_beam_splitter(state, tap, kModeB, 3);
  return fock::apply_beam_splitter(state, BeamSplitter::balanced(), 2, 3);
}

PeelOffResult peel_off(int n, double r2) {
  require_photons(n, 2, "two-fold peel-off");
  require_open_unit(r2);
  const FockState out = gizmo_output(n, r2);
  const std::array<std::size_t, 2> detectors{kDetectorC, kDetectorD};
  const std::array<int, 2> counts{1, 1};
  fock::Projection projection = fock::project_counts(out, detectors, counts);

  PeelOffResult result{std::move(projection.residual), projection.probability, 0.0, r2};
  const fock::Complex component = result.conditional_state.amplitude(OccupationVector{n, n - 2});
  result.amplitude_A = std::numbers::sqrt2 * std::abs(component) * std::sqrt(result.success_probability);
  return result;
}

FockState peel_off_target(int n) {
  require_photons(n, 2, "two-fold peel-off");
  return FockState::from_amplitudes(2, {{OccupationVector{n, n - 2}, 1.0}, {OccupationVector{n - 2, n}, 1.0}});
}

double peel_off_amplitude_closed_form(int n, double r2) {
  require_photons(n, 2, "two-fold peel-off");
  return std::sqrt(0.5 * n * (n - 1.0)) * r2 * std::pow(1.0 - r2, n - 1);
}

double peel_off_probability_closed_form(int n, double r2) {
  const double a = peel_off_amplitude_closed_form(n, r2);
  return a * a;
}

OptimalReflectivity optimal_reflectivity(int n) {
  require_photons(n, 2, "two-fold peel-off");
  auto objective = [n](double r2) { return peel_off(n, r2).success_probability; };

  auto bracket_from_grid = [&](std::size_t cells) {
    std::vector<double> values(cells - 1);
    for (std::size_t i = 1; i < cells; ++i) values[i - 1] = objective(static_cast<double>(i) / cells);
    const auto best = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin()) + 1;
    return std::pair{values, best};
  };

  OptimalReflectivity out;
  std::size_t cells = 32;
  auto [values, best] = bracket_from_grid(cells);
  // Unimodal on the coarse grid: strictly rising up to `best`, falling after.
  bool unimodal = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const bool rising_part = i < best;
    if (rising_part ? !(values[i] > values[i - 1]) : !(values[i] <= values[i - 1])) unimodal = false;
  }
  if (!unimodal) {
    out.grid_fallback = true;
    cells = 2048;
    std::tie(values, best) = bracket_from_grid(cells);
  }
  const double lo = static_cast<double>(best - 1) / cells;
  const double hi = static_cast<double>(best + 1) / cells;
  out.r2_star = golden_section_maximize(objective, std::max(lo, 1e-12), std::min(hi, 1.0 - 1e-12));
  out.probability_star = objective(out.r2_star);
  return out;
}

std::vector<DetectorBranch> peel_off_single_detector(int n, double r2) {
  require_photons(n, 1, "single-detector peel-off");
  require_open_unit(r2);
  const FockState out = gizmo_output(n, r2);
  const std::array<std::size_t, 2> detectors{kDetectorC, kDetectorD};

  std::vector<DetectorBranch> branches;
  for (const std::array<int, 2>& pattern : {std::array<int, 2>{1, 0}, std::array<int, 2>{0, 1}}) {
    fock::Projection projection = fock::project_counts(out, detectors, pattern);
    DetectorBranch branch{pattern, std::move(projection.residual), projection.probability, 0.0};
    const fock::Complex low = branch.conditional_state.amplitude(OccupationVector{n, n - 1});
    const fock::Complex high = branch.conditional_state.amplitude(OccupationVector{n - 1, n});
    if (std::abs(low) > 0.0 && std::abs(high) > 0.0) branch.relative_phase = wrap_phase(std::arg(high) - std::arg(low));
    branches.push_back(std::move(branch));
  }
  return branches;
}

}  // namespace rosetta::protocols
