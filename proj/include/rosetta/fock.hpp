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

// Multimode bosonic Fock states and exact passive linear optics.
//
// Beam-splitter convention: a pair of modes (a, b) transforms as
//   a^dag -> i t a^dag + r b^dag,   b^dag -> i t b^dag + r a^dag,
// so the balanced splitter is t = 1/sqrt(2), r = -1/sqrt(2).

#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace rosetta::fock {

using Complex = std::complex<double>;

inline constexpr double kPruneThreshold = 1e-15;
inline constexpr std::size_t kDefaultBasisCap = 2'000'000;

/// Upper bound on the number of basis kets any state may span. Process-wide;
/// defaults to kDefaultBasisCap.
std::size_t basis_cap();
void set_basis_cap(std::size_t cap);

/// Dimension of the fixed-photon-number subspace, C(photons + modes - 1, modes - 1).
/// Saturates at SIZE_MAX.
std::size_t basis_size(std::size_t modes, int photons);

/// Photon count per mode. Entries are non-negative.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts) : OccupationVector(std::vector<int>(counts)) {}

  std::size_t modes() const { return counts_.size(); }
  int operator[](std::size_t mode) const { return counts_[mode]; }
  int total() const;
  const std::vector<int>& counts() const { return counts_; }

  auto operator<=>(const OccupationVector&) const = default;
  bool operator==(const OccupationVector&) const = default;

 private:
  std::vector<int> counts_;
};

class BeamSplitter {
 public:
  /// Requires t in [0, 1], r in [-1, 1], t^2 + r^2 = 1 within 1e-12.
  BeamSplitter(double t, double r);

  /// t = 1/sqrt(2), r = -1/sqrt(2).
  static BeamSplitter balanced();
  /// t = sqrt(1 - r2), r = +sqrt(r2). r2 in [0, 1].
  static BeamSplitter from_reflectivity(double r2);

  double t() const { return t_; }
  double r() const { return r_; }

  /// [[i t, r], [r, i t]]: row = input mode, column = output mode.
  Eigen::Matrix2cd mode_matrix() const;

 private:
  double t_;
  double r_;
};

/// A pure state with definite total photon number. Amplitudes are stored
/// sparsely and pruned below kPruneThreshold.
class FockState {
 public:
  using Amplitudes = std::map<OccupationVector, Complex>;

  /// Builds a state from explicit amplitudes. Every key must have `modes`
  /// entries and share one photon total. When `normalize` is set the
  /// amplitudes are rescaled to unit norm.
  static FockState from_amplitudes(std::size_t modes, Amplitudes amplitudes, bool normalize = true);

  /// Zero vector on `modes` modes, flagged unnormalized. Produced by
  /// projections with zero probability.
  static FockState empty(std::size_t modes, int total_photons);

  std::size_t modes() const { return modes_; }
  int total_photons() const { return total_photons_; }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  std::size_t size() const { return amplitudes_.size(); }
  bool empty() const { return amplitudes_.empty(); }
  bool normalized() const { return normalized_; }

  Complex amplitude(const OccupationVector& ket) const;
  double norm_squared() const;

 private:
  FockState(std::size_t modes, int total_photons, Amplitudes amplitudes, bool normalized)
      : modes_(modes), total_photons_(total_photons), amplitudes_(std::move(amplitudes)), normalized_(normalized) {}

  std::size_t modes_ = 0;
  int total_photons_ = 0;
  Amplitudes amplitudes_;
  bool normalized_ = true;
};

/// Single basis ket with amplitude 1.
FockState make_fock(std::span<const int> occupations);
FockState make_fock(std::initializer_list<int> occupations);

FockState apply_beam_splitter(const FockState& state, const BeamSplitter& bs, std::size_t mode_a, std::size_t mode_b);

/// Multiplies every ket by exp(i n phi), n = photons in `mode`.
FockState apply_phase_shift(const FockState& state, std::size_t mode, double phi);

enum class Axis { kX, kY, kZ };

/// Angular-momentum generator on the N-photon two-mode subspace, in the basis
/// |N - k, k>, k = 0..N (k = photons in mode 1).
///   Jx = (a^dag b + b^dag a)/2, Jy = -i (a^dag b - b^dag a)/2, Jz = (n_a - n_b)/2.
Eigen::MatrixXcd angular_momentum_matrix(Axis axis, int photons);

/// exp(i angle J_axis) on a two-mode state.
FockState schwinger_rotation(const FockState& state, Axis axis, double angle);

struct Projection {
  FockState residual;
  double probability = 0.0;
};

/// Post-selects `counts` on `modes`. The residual lives on the surviving
/// modes (relative order kept) and is renormalized; probability 0 yields an
/// empty residual flagged unnormalized.
Projection project_counts(const FockState& state, std::span<const std::size_t> modes, std::span<const int> counts);

Complex inner_product(const FockState& bra, const FockState& ket);

/// |<a|b>|^2. Insensitive to global phase.
double fidelity(const FockState& a, const FockState& b);

}  // namespace rosetta::fock
