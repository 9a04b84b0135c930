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

#include "rosetta/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "combinatorics.hpp"
#include "rosetta/protocols.hpp"

namespace rosetta::estimation {
namespace {

using fock::OccupationVector;
using Amplitudes = FockState::Amplitudes;

void require_two_modes(const FockState& state, ObservableKind kind) {
  if (state.modes() != 2) fail(ErrorCode::kInvalidArgument, to_string(kind) + " needs a two-mode state");
}

void add(Amplitudes& out, int na, int nb, Complex value) {
  if (value != Complex{}) out[OccupationVector{na, nb}] += value;
}

// Jx, Jy, Jz on a two-mode amplitude map.
Amplitudes apply_j(const Amplitudes& in, ObservableKind axis) {
  Amplitudes out;
  for (const auto& [ket, amp] : in) {
    const int na = ket[0];
    const int nb = ket[1];
    if (axis == ObservableKind::kJz) {
      add(out, na, nb, 0.5 * (na - nb) * amp);
      continue;
    }
    // a^dag b and b^dag a, each with the 1/2 prefactor.
    const double raise = nb > 0 ? 0.5 * std::sqrt(static_cast<double>(na + 1) * nb) : 0.0;
    const double lower = na > 0 ? 0.5 * std::sqrt(static_cast<double>(na) * (nb + 1)) : 0.0;
    if (axis == ObservableKind::kJx) {
      if (raise != 0.0) add(out, na + 1, nb - 1, raise * amp);
      if (lower != 0.0) add(out, na - 1, nb + 1, lower * amp);
    } else {
      if (raise != 0.0) add(out, na + 1, nb - 1, Complex(0.0, -raise) * amp);
      if (lower != 0.0) add(out, na - 1, nb + 1, Complex(0.0, lower) * amp);
    }
  }
  return out;
}

Amplitudes apply_j_squared(const Amplitudes& in) {
  Amplitudes out;
  for (ObservableKind axis : {ObservableKind::kJx, ObservableKind::kJy, ObservableKind::kJz}) {
    for (const auto& [ket, amp] : apply_j(apply_j(in, axis), axis)) out[ket] += amp;
  }
  return out;
}

double overlap_norm(const Amplitudes& v) {
  double sum = 0.0;
  for (const auto& kv : v) sum += std::norm(kv.second);
  return sum;
}

Complex bra_dot(const FockState& bra, const Amplitudes& v) {
  Complex sum{};
  for (const auto& [ket, amp] : v) sum += std::conj(bra.amplitude(ket)) * amp;
  return sum;
}

// Sum over qubits of sigma_x, applied to a dense register.
std::vector<Complex> apply_collective_a(const QubitRegister& reg) {
  const auto& amps = reg.amplitudes();
  std::vector<Complex> out(amps.size());
  for (std::size_t q = 0; q < reg.num_qubits(); ++q) {
    const std::size_t bit = reg.mask(q);
    for (std::size_t i = 0; i < amps.size(); ++i) out[i] += amps[i ^ bit];
  }
  return out;
}

void require_single_qubit(const SeparableQubits& state) {
  if (state.single.num_qubits() != 1) fail(ErrorCode::kInvalidArgument, "separable copies must be single qubits");
  if (state.copies == 0) fail(ErrorCode::kInvalidArgument, "separable ensemble needs at least one copy");
}

}  // namespace

std::string to_string(ObservableKind kind) {
  switch (kind) {
    case ObservableKind::kJx: return "Jx";
    case ObservableKind::kJy: return "Jy";
    case ObservableKind::kJz: return "Jz";
    case ObservableKind::kJsquared: return "J^2";
    case ObservableKind::kNumberDiff: return "number difference";
    case ObservableKind::kNumberSum: return "number sum";
    case ObservableKind::kModeNumber: return "mode number";
    case ObservableKind::kAN: return "A_N";
    case ObservableKind::kCollectiveA: return "collective A";
  }
  return "unknown";
}

Amplitudes apply_observable(const FockState& ket, const Observable& obs) {
  Amplitudes out;
  switch (obs.kind) {
    case ObservableKind::kJx:
    case ObservableKind::kJy:
    case ObservableKind::kJz:
      require_two_modes(ket, obs.kind);
      return apply_j(ket.amplitudes(), obs.kind);
    case ObservableKind::kJsquared:
      require_two_modes(ket, obs.kind);
      return apply_j_squared(ket.amplitudes());
    case ObservableKind::kNumberDiff:
      require_two_modes(ket, obs.kind);
      for (const auto& [occ, amp] : ket.amplitudes()) {
        if (occ[0] != occ[1]) out[occ] = static_cast<double>(occ[0] - occ[1]) * amp;
      }
      return out;
    case ObservableKind::kNumberSum:
      for (const auto& [occ, amp] : ket.amplitudes()) {
        if (occ.total() != 0) out[occ] = static_cast<double>(occ.total()) * amp;
      }
      return out;
    case ObservableKind::kModeNumber:
      if (obs.mode >= ket.modes()) fail(ErrorCode::kOutOfRange, "mode index out of range");
      for (const auto& [occ, amp] : ket.amplitudes()) {
        if (occ[obs.mode] != 0) out[occ] = static_cast<double>(occ[obs.mode]) * amp;
      }
      return out;
    case ObservableKind::kAN: {
      require_two_modes(ket, obs.kind);
      const int n = ket.total_photons();
      if (n < 1) fail(ErrorCode::kInvalidArgument, "A_N needs N >= 1");
      const Complex low = ket.amplitude(OccupationVector{n, 0});
      const Complex high = ket.amplitude(OccupationVector{0, n});
      if (high != Complex{}) out[OccupationVector{n, 0}] = high;
      if (low != Complex{}) out[OccupationVector{0, n}] = low;
      return out;
    }
    case ObservableKind::kCollectiveA:
      break;
  }
  fail(ErrorCode::kInvalidArgument, to_string(obs.kind) + " is not defined on Fock states");
}

Complex matrix_element(const FockState& bra, const Observable& obs, const FockState& ket) {
  if (bra.modes() != ket.modes()) fail(ErrorCode::kInvalidArgument, "states have different mode counts");
  return bra_dot(bra, apply_observable(ket, obs));
}

double expectation(const FockState& state, const Observable& obs) {
  return matrix_element(state, obs, state).real();
}

double variance(const FockState& state, const Observable& obs) {
  const Amplitudes image = apply_observable(state, obs);
  const double mean = bra_dot(state, image).real();
  return std::max(0.0, overlap_norm(image) - mean * mean);
}

double expectation(const QubitRegister& reg, const Observable& obs) {
  if (obs.kind == ObservableKind::kAN) return qubits::expect_AN(reg);
  if (obs.kind == ObservableKind::kCollectiveA) {
    const std::vector<Complex> image = apply_collective_a(reg);
    Complex sum{};
    for (std::size_t i = 0; i < image.size(); ++i) sum += std::conj(reg.amplitudes()[i]) * image[i];
    return sum.real();
  }
  fail(ErrorCode::kInvalidArgument, to_string(obs.kind) + " is not defined on qubit registers");
}

double variance(const QubitRegister& reg, const Observable& obs) {
  const double mean = expectation(reg, obs);
  double second = 0.0;
  if (obs.kind == ObservableKind::kAN) {
    // A_N^2 is the projector onto span{|0...0>, |1...1>}.
    second = std::norm(reg.amplitudes().front()) + std::norm(reg.amplitudes().back());
  } else {
    for (const Complex& c : apply_collective_a(reg)) second += std::norm(c);
  }
  return std::max(0.0, second - mean * mean);
}

double expectation(const SeparableQubits& state, const Observable& obs) {
  require_single_qubit(state);
  if (obs.kind != ObservableKind::kCollectiveA) {
    fail(ErrorCode::kInvalidArgument, to_string(obs.kind) + " is not defined on separable ensembles");
  }
  return static_cast<double>(state.copies) * expectation(state.single, obs);
}

double variance(const SeparableQubits& state, const Observable& obs) {
  require_single_qubit(state);
  if (obs.kind != ObservableKind::kCollectiveA) {
    fail(ErrorCode::kInvalidArgument, to_string(obs.kind) + " is not defined on separable ensembles");
  }
  return static_cast<double>(state.copies) * variance(state.single, obs);
}

FockState uniform_jz_state(int n, std::span<const double> phases) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "need N >= 1");
  if (!phases.empty() && phases.size() != static_cast<std::size_t>(n) + 1) {
    fail(ErrorCode::kInvalidArgument, "need one phase per Jz eigenstate");
  }
  Amplitudes amps;
  const double weight = 1.0 / std::sqrt(n + 1.0);
  for (int k = 0; k <= n; ++k) amps[OccupationVector{n - k, k}] = std::polar(weight, phases.empty() ? 0.0 : phases[k]);
  return FockState::from_amplitudes(2, std::move(amps), false);
}

FockState extreme_jz_state(int n, double phi) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "need N >= 1");
  const double s = std::numbers::sqrt2 / 2.0;
  return FockState::from_amplitudes(2, {{OccupationVector{n, 0}, s}, {OccupationVector{0, n}, std::polar(s, phi)}},
                                    false);
}

FockState binomial_jz_state(int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "need N >= 1");
  Amplitudes amps;
  for (int k = 0; k <= n; ++k) {
    const double log_weight =
        detail::log_factorial(n) - detail::log_factorial(k) - detail::log_factorial(n - k) - n * std::numbers::ln2;
    amps[OccupationVector{n - k, k}] = std::exp(0.5 * log_weight);
  }
  return FockState::from_amplitudes(2, std::move(amps), false);
}

VarianceCatalog variance_catalog(int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "variance catalog needs N >= 1");
  if (fock::basis_size(2, n) > fock::basis_cap()) fail(ErrorCode::kCapacityExceeded, "N exceeds the basis cap");
  auto entry = [](const FockState& state) {
    VarianceEntry e;
    e.variance = variance(state, Observable::jz());
    e.delta_jz = std::sqrt(e.variance);
    e.delta_q = 1.0 / (2.0 * e.delta_jz);
    return e;
  };
  return {n, entry(uniform_jz_state(n)), entry(extreme_jz_state(n)), entry(binomial_jz_state(n))};
}

SensitivityReport make_report(double phi, double expectation_value, double variance_value, double derivative) {
  SensitivityReport report;
  report.phi = phi;
  report.expectation = expectation_value;
  report.std_dev = std::sqrt(std::max(0.0, variance_value));
  report.derivative = derivative;
  report.divergent = !(std::abs(derivative) >= kDivergenceTolerance);
  if (!report.divergent) report.delta_phi = report.std_dev / std::abs(derivative);
  return report;
}

Scheme parse_scheme(const std::string& name) {
  if (name == "separable") return Scheme::kSeparable;
  if (name == "ghz") return Scheme::kGhz;
  if (name == "noon") return Scheme::kNoon;
  if (name == "yurke") return Scheme::kYurke;
  if (name == "dual-fock") return Scheme::kDualFock;
  if (name == "single-fock") return Scheme::kSingleFock;
  fail(ErrorCode::kInvalidArgument, "unknown scheme '" + name + "'");
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kSeparable: return "separable";
    case Scheme::kGhz: return "ghz";
    case Scheme::kNoon: return "noon";
    case Scheme::kYurke: return "yurke";
    case Scheme::kDualFock: return "dual-fock";
    case Scheme::kSingleFock: return "single-fock";
  }
  return "unknown";
}

std::vector<SensitivityReport> sensitivity_scan(Scheme scheme, int n, std::span<const double> phi_grid, double dphi) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "sensitivity needs N >= 1");
  std::vector<SensitivityReport> out;
  out.reserve(phi_grid.size());
  switch (scheme) {
    case Scheme::kSeparable: {
      auto family = [n](double phi) {
        const double s = std::numbers::sqrt2 / 2.0;
        return SeparableQubits{QubitRegister(1, {Complex(s, 0.0), std::polar(s, phi)}), static_cast<std::size_t>(n)};
      };
      for (double phi : phi_grid) out.push_back(sensitivity(family, Observable::collective_a(), phi, dphi));
      break;
    }
    case Scheme::kGhz: {
      const QubitRegister ghz = qubits::make_ghz(static_cast<std::size_t>(n));
      auto family = [&ghz, n](double phi) {
        QubitRegister reg = ghz;
        for (int q = 0; q < n; ++q) reg = qubits::apply_gate(std::move(reg), qubits::Phase{static_cast<std::size_t>(q), phi});
        return reg;
      };
      for (double phi : phi_grid) out.push_back(sensitivity(family, Observable::an(), phi, dphi));
      break;
    }
    case Scheme::kNoon: {
      const FockState input = protocols::noon(n);
      auto family = [&input](double phi) { return fock::apply_phase_shift(input, 1, phi); };
      for (double phi : phi_grid) out.push_back(sensitivity(family, Observable::an(), phi, dphi));
      break;
    }
    case Scheme::kYurke:
    case Scheme::kDualFock:
    case Scheme::kSingleFock: {
      const FockState input = scheme == Scheme::kYurke      ? protocols::yurke(n)
                              : scheme == Scheme::kDualFock ? protocols::dual_fock(n)
                                                            : fock::make_fock({n, 0});
      auto family = [&input](double phi) { return protocols::mach_zehnder(input, phi); };
      for (double phi : phi_grid) out.push_back(sensitivity(family, Observable::jz(), phi, dphi));
      break;
    }
  }
  return out;
}

SensitivityReport scheme_sensitivity(Scheme scheme, int n, double phi, double dphi) {
  const double grid[] = {phi};
  return sensitivity_scan(scheme, n, grid, dphi).front();
}

UncertaintyCheck intelligent_state_check(const FockState& state) {
  if (state.modes() != 2) fail(ErrorCode::kInvalidArgument, "uncertainty check needs a two-mode state");
  if (state.total_photons() < 1) fail(ErrorCode::kInvalidArgument, "uncertainty check needs N >= 1");
  UncertaintyCheck check;
  check.lhs = std::sqrt(variance(state, Observable::jx()) * variance(state, Observable::jy()));
  check.rhs = std::abs(expectation(state, Observable::jz())) / 2.0;
  if (check.lhs < check.rhs - 1e-12 * std::max(1.0, check.rhs)) {
    fail(ErrorCode::kDomain, "state violates Delta Jx Delta Jy >= |<Jz>|/2");
  }
  check.satisfied = std::abs(check.lhs - check.rhs) <= 1e-9;
  return check;
}

}  // namespace rosetta::estimation
