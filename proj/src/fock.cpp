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

#include "rosetta/fock.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "combinatorics.hpp"
#include "rosetta/error.hpp"

namespace rosetta::fock {
namespace {

std::atomic<std::size_t> g_basis_cap{kDefaultBasisCap};

void check_cap(std::size_t modes, int photons) {
  const std::size_t size = basis_size(modes, photons);
  if (size > basis_cap()) {
    fail(ErrorCode::kCapacityExceeded, "basis size " + std::to_string(size) + " for " + std::to_string(photons) +
                                           " photons in " + std::to_string(modes) + " modes exceeds cap " +
                                           std::to_string(basis_cap()));
  }
}

void check_mode(const FockState& state, std::size_t mode) {
  if (mode >= state.modes()) {
    fail(ErrorCode::kOutOfRange,
         "mode index " + std::to_string(mode) + " out of range for " + std::to_string(state.modes()) + " modes");
  }
}

void prune(FockState::Amplitudes& amplitudes) {
  std::erase_if(amplitudes, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Real factor of the (k, l) term when |m, n> passes a splitter (t, r): k of the
// m photons and l of the n photons are transmitted.
double splitter_weight(int m, int n, int k, int l, double t, double r) {
  const int transmitted = k + l;
  const int reflected = m + n - transmitted;
  if (t == 0.0 && transmitted > 0) return 0.0;
  if (r == 0.0 && reflected > 0) return 0.0;
  const int out_a = k + (n - l);
  const int out_b = (m - k) + l;
  const double sign = (r < 0.0 && (reflected & 1)) ? -1.0 : 1.0;
  if (m + n <= detail::kExactFactorialLimit) {
    const double ratio = detail::factorial(out_a) * detail::factorial(out_b) /
                         (detail::factorial(m) * detail::factorial(n));
    return detail::binomial(m, k) * detail::binomial(n, l) * std::sqrt(ratio) * std::pow(t, transmitted) *
           std::pow(std::abs(r), reflected) * sign;
  }
  double log_weight = detail::log_factorial(m) - detail::log_factorial(k) - detail::log_factorial(m - k) +
                      detail::log_factorial(n) - detail::log_factorial(l) - detail::log_factorial(n - l) +
                      0.5 * (detail::log_factorial(out_a) + detail::log_factorial(out_b) - detail::log_factorial(m) -
                             detail::log_factorial(n));
  if (transmitted > 0) log_weight += transmitted * std::log(t);
  if (reflected > 0) log_weight += reflected * std::log(std::abs(r));
  return sign * std::exp(log_weight);
}

}  // namespace

std::size_t basis_cap() { return g_basis_cap.load(std::memory_order_relaxed); }

void set_basis_cap(std::size_t cap) {
  if (cap == 0) fail(ErrorCode::kInvalidArgument, "basis cap must be positive");
  g_basis_cap.store(cap, std::memory_order_relaxed);
}

std::size_t basis_size(std::size_t modes, int photons) {
  if (modes == 0 || photons < 0) return 0;
  // C(photons + modes - 1, modes - 1), built incrementally so every partial
  // product is itself a binomial coefficient.
  const std::size_t k = modes - 1;
  const std::size_t n = static_cast<std::size_t>(photons) + k;
  unsigned __int128 value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(value);
}

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) fail(ErrorCode::kInvalidArgument, "occupation numbers must be non-negative");
  }
}

int OccupationVector::total() const {
  int sum = 0;
  for (int c : counts_) sum += c;
  return sum;
}

BeamSplitter::BeamSplitter(double t, double r) : t_(t), r_(r) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::kInvalidArgument, "transmission amplitude must lie in [0, 1]");
  if (!(r >= -1.0 && r <= 1.0)) fail(ErrorCode::kInvalidArgument, "reflection amplitude must lie in [-1, 1]");
  if (std::abs(t * t + r * r - 1.0) > 1e-12) fail(ErrorCode::kInvalidArgument, "beam splitter requires t^2 + r^2 = 1");
}

BeamSplitter BeamSplitter::balanced() { return {std::numbers::sqrt2 / 2.0, -std::numbers::sqrt2 / 2.0}; }

BeamSplitter BeamSplitter::from_reflectivity(double r2) {
  if (!(r2 >= 0.0 && r2 <= 1.0)) fail(ErrorCode::kInvalidArgument, "reflectivity must lie in [0, 1]");
  return {std::sqrt(1.0 - r2), std::sqrt(r2)};
}

Eigen::Matrix2cd BeamSplitter::mode_matrix() const {
  Eigen::Matrix2cd m;
  m << Complex(0.0, t_), Complex(r_, 0.0), Complex(r_, 0.0), Complex(0.0, t_);
  return m;
}

FockState FockState::from_amplitudes(std::size_t modes, Amplitudes amplitudes, bool normalize) {
  if (modes == 0) fail(ErrorCode::kInvalidArgument, "a Fock state needs at least one mode");
  if (amplitudes.empty()) fail(ErrorCode::kInvalidArgument, "a Fock state needs at least one ket");
  const int total = amplitudes.begin()->first.total();
  for (const auto& [ket, amp] : amplitudes) {
    if (ket.modes() != modes) fail(ErrorCode::kInvalidArgument, "ket length does not match the mode count");
    if (ket.total() != total) fail(ErrorCode::kInvalidArgument, "kets must share one total photon number");
  }
  check_cap(modes, total);
  prune(amplitudes);
  if (amplitudes.empty()) fail(ErrorCode::kInvalidArgument, "all amplitudes are zero");
  if (normalize) {
    double norm2 = 0.0;
    for (const auto& kv : amplitudes) norm2 += std::norm(kv.second);
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& kv : amplitudes) kv.second *= scale;
  }
  FockState state(modes, total, std::move(amplitudes), true);
  state.normalized_ = std::abs(state.norm_squared() - 1.0) <= 1e-12;
  return state;
}

FockState FockState::empty(std::size_t modes, int total_photons) {
  if (modes == 0) fail(ErrorCode::kInvalidArgument, "a Fock state needs at least one mode");
  return FockState(modes, std::max(total_photons, 0), {}, false);
}

Complex FockState::amplitude(const OccupationVector& ket) const {
  auto it = amplitudes_.find(ket);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double FockState::norm_squared() const {
  double sum = 0.0;
  for (const auto& kv : amplitudes_) sum += std::norm(kv.second);
  return sum;
}

FockState make_fock(std::span<const int> occupations) {
  if (occupations.empty()) fail(ErrorCode::kInvalidArgument, "occupation list must be non-empty");
  OccupationVector ket(std::vector<int>(occupations.begin(), occupations.end()));
  const std::size_t modes = ket.modes();
  return FockState::from_amplitudes(modes, {{std::move(ket), Complex{1.0, 0.0}}}, false);
}

FockState make_fock(std::initializer_list<int> occupations) {
  return make_fock(std::span<const int>(occupations.begin(), occupations.size()));
}

FockState apply_beam_splitter(const FockState& state, const BeamSplitter& bs, std::size_t mode_a, std::size_t mode_b) {
  check_mode(state, mode_a);
  check_mode(state, mode_b);
  if (mode_a == mode_b) fail(ErrorCode::kInvalidArgument, "beam splitter needs two distinct modes");
  check_cap(state.modes(), state.total_photons());
  if (state.empty()) return state;

  FockState::Amplitudes out;
  for (const auto& [ket, amp] : state.amplitudes()) {
    const int m = ket[mode_a];
    const int n = ket[mode_b];
    std::vector<int> counts = ket.counts();
    for (int k = 0; k <= m; ++k) {
      for (int l = 0; l <= n; ++l) {
        const double weight = splitter_weight(m, n, k, l, bs.t(), bs.r());
        if (weight == 0.0) continue;
        counts[mode_a] = k + (n - l);
        counts[mode_b] = (m - k) + l;
        out[OccupationVector(counts)] += amp * (weight * i_power(k + l));
      }
    }
  }
  prune(out);
  if (out.empty()) return FockState::empty(state.modes(), state.total_photons());
  return FockState::from_amplitudes(state.modes(), std::move(out), false);
}

FockState apply_phase_shift(const FockState& state, std::size_t mode, double phi) {
  check_mode(state, mode);
  if (state.empty()) return state;
  FockState::Amplitudes out = state.amplitudes();
  for (auto& [ket, amp] : out) amp *= std::polar(1.0, ket[mode] * phi);
  return FockState::from_amplitudes(state.modes(), std::move(out), false);
}

Eigen::MatrixXcd angular_momentum_matrix(Axis axis, int photons) {
  if (photons < 0) fail(ErrorCode::kInvalidArgument, "photon number must be non-negative");
  const int dim = photons + 1;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    if (axis == Axis::kZ) j(k, k) = 0.5 * (photons - 2 * k);
  }
  if (axis == Axis::kZ) return j;
  // a^dag b maps |N-k, k> to sqrt((N-k+1) k) |N-k+1, k-1>.
  for (int k = 1; k < dim; ++k) {
    const double s = 0.5 * std::sqrt(static_cast<double>(photons - k + 1) * k);
    if (axis == Axis::kX) {
      j(k - 1, k) = s;
      j(k, k - 1) = s;
    } else {
      j(k - 1, k) = Complex(0.0, -s);
      j(k, k - 1) = Complex(0.0, s);
    }
  }
  return j;
}

FockState schwinger_rotation(const FockState& state, Axis axis, double angle) {
  if (state.modes() != 2) fail(ErrorCode::kInvalidArgument, "Schwinger rotation needs a two-mode state");
  if (state.empty()) return state;
  const int n = state.total_photons();
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n + 1);
  for (const auto& [ket, amp] : state.amplitudes()) psi(ket[1]) = amp;

  Eigen::VectorXcd rotated;
  if (axis == Axis::kZ) {
    rotated = psi;
    for (int k = 0; k <= n; ++k) rotated(k) *= std::polar(1.0, angle * 0.5 * (n - 2 * k));
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(angular_momentum_matrix(axis, n));
    const Eigen::VectorXcd phases =
        solver.eigenvalues().unaryExpr([angle](double lambda) { return std::polar(1.0, angle * lambda); });
    rotated = solver.eigenvectors() * phases.asDiagonal() * (solver.eigenvectors().adjoint() * psi);
  }

  FockState::Amplitudes out;
  for (int k = 0; k <= n; ++k) {
    if (std::abs(rotated(k)) >= kPruneThreshold) out[OccupationVector{n - k, k}] = rotated(k);
  }
  if (out.empty()) return FockState::empty(2, n);
  return FockState::from_amplitudes(2, std::move(out), false);
}

Projection project_counts(const FockState& state, std::span<const std::size_t> modes, std::span<const int> counts) {
  if (modes.size() != counts.size()) fail(ErrorCode::kInvalidArgument, "modes and counts differ in length");
  std::vector<bool> measured(state.modes(), false);
  for (std::size_t mode : modes) {
    check_mode(state, mode);
    if (measured[mode]) fail(ErrorCode::kInvalidArgument, "projected modes must be distinct");
    measured[mode] = true;
  }
  int detected = 0;
  for (int c : counts) {
    if (c < 0) fail(ErrorCode::kInvalidArgument, "counts must be non-negative");
    detected += c;
  }
  const std::size_t remaining = state.modes() - modes.size();
  if (remaining == 0) fail(ErrorCode::kInvalidArgument, "projection must leave at least one mode");

  FockState::Amplitudes kept;
  double probability = 0.0;
  for (const auto& [ket, amp] : state.amplitudes()) {
    bool match = true;
    for (std::size_t i = 0; i < modes.size() && match; ++i) match = ket[modes[i]] == counts[i];
    if (!match) continue;
    std::vector<int> rest;
    rest.reserve(remaining);
    for (std::size_t mode = 0; mode < state.modes(); ++mode) {
      if (!measured[mode]) rest.push_back(ket[mode]);
    }
    kept.emplace(OccupationVector(std::move(rest)), amp);
    probability += std::norm(amp);
  }
  const int residual_photons = state.total_photons() - detected;
  if (kept.empty() || probability == 0.0) return {FockState::empty(remaining, residual_photons), 0.0};
  return {FockState::from_amplitudes(remaining, std::move(kept), true), std::min(probability, 1.0)};
}

Complex inner_product(const FockState& bra, const FockState& ket) {
  if (bra.modes() != ket.modes()) fail(ErrorCode::kInvalidArgument, "states have different mode counts");
  Complex sum{};
  if (bra.total_photons() != ket.total_photons()) return sum;
  for (const auto& [occ, amp] : bra.amplitudes()) sum += std::conj(amp) * ket.amplitude(occ);
  return sum;
}

double fidelity(const FockState& a, const FockState& b) {
  return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

}  // namespace rosetta::fock
