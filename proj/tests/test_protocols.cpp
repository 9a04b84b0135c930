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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "rosetta/error.hpp"
#include "rosetta/qubits.hpp"

using namespace rosetta;
using namespace rosetta::protocols;
using fock::Complex;
using fock::OccupationVector;

namespace {

constexpr double kPi = std::numbers::pi;

double rate_from_curve_at(const DepositionCurve& curve, std::size_t i) { return curve.normalized_rate[i]; }

}  // namespace

TEST(NamedStates, Shapes) {
  const FockState d = dual_fock(3);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d.amplitude(OccupationVector{3, 3}), Complex(1.0, 0.0));

  const FockState n4 = noon(4);
  EXPECT_EQ(n4.size(), 2u);
  EXPECT_NEAR(std::abs(n4.amplitude(OccupationVector{4, 0})), std::numbers::sqrt2 / 2, 1e-15);
  EXPECT_NEAR(std::abs(n4.amplitude(OccupationVector{0, 4})), std::numbers::sqrt2 / 2, 1e-15);

  const FockState y3 = yurke(3);
  EXPECT_NEAR(std::norm(y3.amplitude(OccupationVector{2, 1})), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(y3.amplitude(OccupationVector{1, 2})), 0.5, 1e-15);

  EXPECT_EQ(make_named_state(NamedState::kNoon, 2).size(), 2u);
  EXPECT_THROW(yurke(4), Error);
  EXPECT_THROW(noon(0), Error);
  EXPECT_THROW(dual_fock(-1), Error);
}

TEST(NamedStates, NoonOfOneIsSplitPhoton) {
  const FockState n1 = noon(1);
  EXPECT_EQ(n1.total_photons(), 1);
  EXPECT_EQ(n1.size(), 2u);
}

TEST(MachZehnder, FringeMatchesSimulation) {
  for (double phi = 0.0; phi <= 2 * kPi; phi += 0.2) {
    const FockState out = mach_zehnder(fock::make_fock({1, 0}), phi);
    EXPECT_NEAR(std::norm(out.amplitude(OccupationVector{0, 1})), mach_zehnder_fringe(phi), 1e-14);
    EXPECT_NEAR(mach_zehnder_fringe(phi), (1.0 + std::cos(phi)) / 2.0, 1e-14);
  }
  EXPECT_THROW(mach_zehnder(fock::make_fock({1, 0, 0}), 0.1), Error);
}

TEST(MachZehnder, PreservesPhotonNumber) {
  const FockState out = mach_zehnder(dual_fock(4), 0.7);
  EXPECT_EQ(out.total_photons(), 8);
  EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
}

TEST(Rosetta, OffsetIsPi) {
  EXPECT_NEAR(calibrate_rosetta_offset(), kPi, 1e-12);
}

TEST(Rosetta, CircuitAndInterferometerAgree) {
  const RosettaComparison cmp = compare_rosetta(101);
  ASSERT_EQ(cmp.phi.size(), 101u);
  EXPECT_DOUBLE_EQ(cmp.phi.front(), 0.0);
  EXPECT_DOUBLE_EQ(cmp.phi.back(), 2 * kPi);
  EXPECT_LT(cmp.max_abs_difference, 1e-12);
  for (std::size_t i = 0; i < cmp.phi.size(); ++i) {
    EXPECT_NEAR(cmp.qubit_circuit[i], qubits::rosetta_fringe(cmp.phi[i]), 1e-15);
  }
  EXPECT_THROW(compare_rosetta(1), Error);
}

TEST(Hom, ProducesTwoPhotonNoon) {
  const FockState out = hom_entangle();
  EXPECT_EQ(out.amplitude(OccupationVector{1, 1}), Complex{});
  EXPECT_NEAR(fock::fidelity(out, noon(2)), 1.0, 1e-14);
  // Both kets carry the same phase -i.
  EXPECT_NEAR(std::arg(out.amplitude(OccupationVector{2, 0})), -kPi / 2, 1e-14);
  EXPECT_NEAR(std::arg(out.amplitude(OccupationVector{0, 2})), -kPi / 2, 1e-14);
}

TEST(Hom, SinglePhotonControl) {
  const FockState out = hom_entangle(fock::make_fock({1, 0}));
  EXPECT_NEAR(fock::fidelity(out, noon(1)), 0.5, 1e-14);
  EXPECT_EQ(fock::fidelity(out, noon(2)), 0.0);
  EXPECT_THROW(hom_entangle(fock::make_fock({1, 1, 0})), Error);
}

TEST(PhaseGrid, EndpointsAndSpacing) {
  const auto grid = phase_grid(5, 0.0, 1.0);
  ASSERT_EQ(grid.size(), 5u);
  EXPECT_DOUBLE_EQ(grid[0], 0.0);
  EXPECT_DOUBLE_EQ(grid[2], 0.5);
  EXPECT_DOUBLE_EQ(grid[4], 1.0);
  EXPECT_EQ(phase_grid().size(), kDefaultPhasePoints);
  EXPECT_DOUBLE_EQ(phase_grid().back(), 2 * kPi);
  EXPECT_THROW(phase_grid(1), Error);
}

TEST(Deposition, NoonRateIsCosineSquared) {
  const auto grid = phase_grid();
  for (int n : {1, 2, 3, 5, 8}) {
    const DepositionCurve curve = deposition_rate(noon(n), grid);
    for (std::size_t i = 0; i < grid.size(); i += 7) {
      const double c = std::cos(n * grid[i] / 2.0);
      EXPECT_NEAR(rate_from_curve_at(curve, i), c * c, 1e-12);
    }
    // <0,0|a^N|N,0> = sqrt(N!), so the peak of |sqrt(N!/2) (1 + e^{iN phi})|^2 is 2 N!.
    const double fact = oracle::factorial(n);
    EXPECT_NEAR(curve.rate.front(), 2.0 * fact, 1e-12 * fact);
  }
}

TEST(Deposition, LargePhotonNumberStaysFinite) {
  const auto grid = phase_grid(2001);
  const DepositionCurve curve = deposition_rate(noon(400), grid);
  for (std::size_t i = 0; i < grid.size(); i += 13) {
    const double c = std::cos(400 * grid[i] / 2.0);
    EXPECT_NEAR(curve.normalized_rate[i], c * c, 1e-9);
  }
  EXPECT_TRUE(std::isinf(curve.rate.front()));  // 2 * 400! overflows a double
}

TEST(Deposition, PeriodAndMaxima) {
  const auto grid = phase_grid();
  for (int n : {1, 2, 3, 4, 6}) {
    const DepositionCurve curve = deposition_rate(noon(n), grid);
    EXPECT_NEAR(fringe_period(curve), 2 * kPi / n, 0.01 * 2 * kPi / n) << "N=" << n;
    EXPECT_EQ(fringe_maxima(curve).size(), static_cast<std::size_t>(n)) << "N=" << n;
  }
}

TEST(Deposition, UncorrelatedExposuresKeepSinglePhotonPeriod) {
  const auto grid = phase_grid();
  const DepositionCurve single = deposition_rate(noon(1), grid);
  for (int n : {2, 4}) {
    const DepositionCurve classical = uncorrelated_deposition(single, n);
    EXPECT_NEAR(fringe_period(classical), 2 * kPi, 0.01 * 2 * kPi);
    EXPECT_EQ(fringe_maxima(classical).size(), 1u);
    for (std::size_t i = 0; i < grid.size(); i += 11) {
      EXPECT_NEAR(classical.normalized_rate[i], std::pow(single.normalized_rate[i], n), 1e-15);
    }
  }
  EXPECT_THROW(uncorrelated_deposition(single, 0), Error);
}

TEST(Deposition, RejectsBadStates) {
  const auto grid = phase_grid(11);
  EXPECT_THROW(deposition_rate(fock::make_fock({1, 0, 0}), grid), Error);
  EXPECT_THROW(deposition_rate(fock::make_fock({0, 0}), grid), Error);
}

TEST(Gizmo, MatchesPermanentOracle) {
  for (double r2 : {0.2, 0.5}) {
    const FockState out = gizmo_output(2, r2);
    const fock::BeamSplitter tap = fock::BeamSplitter::from_reflectivity(r2);
    const fock::BeamSplitter half = fock::BeamSplitter::balanced();
    const Eigen::MatrixXcd network = oracle::splitter_matrix(4, tap.t(), tap.r(), 0, 2) *
                                     oracle::splitter_matrix(4, tap.t(), tap.r(), 1, 3) *
                                     oracle::splitter_matrix(4, half.t(), half.r(), 2, 3);
    for (const auto& ket : oracle::enumerate_kets(4, 4)) {
      const Complex expected = oracle::transition_amplitude(network, {2, 2, 0, 0}, ket);
      EXPECT_NEAR(std::abs(out.amplitude(OccupationVector(ket)) - expected), 0.0, 1e-13);
    }
  }
}

TEST(PeelOff, MatchesClosedForm) {
  for (int n = 2; n <= 6; ++n) {
    for (double r2 : {0.05, 0.2, 1.0 / n, 0.5, 0.8}) {
      const PeelOffResult res = peel_off(n, r2);
      EXPECT_NEAR(res.success_probability, oracle::peel_off_probability(n, r2), 1e-12);
      EXPECT_NEAR(res.success_probability, peel_off_probability_closed_form(n, r2), 1e-12);
      EXPECT_NEAR(res.amplitude_A, peel_off_amplitude_closed_form(n, r2), 1e-12);
      EXPECT_GE(fock::fidelity(res.conditional_state, peel_off_target(n)), 1.0 - 1e-12);
      EXPECT_EQ(res.conditional_state.total_photons(), 2 * n - 2);
      EXPECT_DOUBLE_EQ(res.reflectivity_r2, r2);
    }
  }
}

TEST(PeelOff, TwoPhotonsGiveTwoZeroNoon) {
  const PeelOffResult res = peel_off(2, 0.5);
  EXPECT_GE(fock::fidelity(res.conditional_state, noon(2)), 1.0 - 1e-12);
}

TEST(PeelOff, Validation) {
  EXPECT_THROW(peel_off(1, 0.5), Error);
  EXPECT_THROW(peel_off(3, 0.0), Error);
  EXPECT_THROW(peel_off(3, 1.0), Error);
  EXPECT_THROW(peel_off(3, std::nan("")), Error);
  EXPECT_THROW(peel_off_target(1), Error);
}

TEST(PeelOff, OptimumAtInverseN) {
  for (int n = 2; n <= 7; ++n) {
    const OptimalReflectivity opt = optimal_reflectivity(n);
    EXPECT_NEAR(opt.r2_star, 1.0 / n, 1e-5) << "N=" << n;
    EXPECT_NEAR(opt.probability_star, peel_off_probability_closed_form(n, 1.0 / n), 1e-10);
    EXPECT_FALSE(opt.grid_fallback);
  }
}

TEST(PeelOff, OptimalProbabilityApproachesLimit) {
  const double limit = 0.5 * std::exp(-2.0);
  double previous = 1.0;
  for (int n : {2, 4, 8, 16, 64, 256, 4096}) {
    const double gap = std::abs(peel_off_probability_closed_form(n, 1.0 / n) - limit);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
  EXPECT_LT(previous, 1e-4);
}

TEST(PeelOff, SingleDetectorBranches) {
  for (int n = 1; n <= 4; ++n) {
    const double r2 = 0.3;
    const auto branches = peel_off_single_detector(n, r2);
    ASSERT_EQ(branches.size(), 2u);
    EXPECT_EQ(branches[0].pattern, (std::array<int, 2>{1, 0}));
    EXPECT_EQ(branches[1].pattern, (std::array<int, 2>{0, 1}));

    // Direct tally over the unprojected output.
    const FockState out = gizmo_output(n, r2);
    for (const DetectorBranch& b : branches) {
      double p = 0.0;
      for (const auto& [ket, amp] : out.amplitudes()) {
        if (ket[kDetectorC] == b.pattern[0] && ket[kDetectorD] == b.pattern[1]) p += std::norm(amp);
      }
      EXPECT_NEAR(b.probability, p, 1e-13);
      EXPECT_EQ(b.conditional_state.total_photons(), 2 * n - 1);
      EXPECT_NEAR(b.conditional_state.norm_squared(), 1.0, 1e-12);
      const Complex low = b.conditional_state.amplitude(OccupationVector{n, n - 1});
      const Complex high = b.conditional_state.amplitude(OccupationVector{n - 1, n});
      EXPECT_NEAR(std::abs(low), std::abs(high), 1e-12);
      EXPECT_NEAR(std::norm(low) + std::norm(high), 1.0, 1e-12);
    }
    // With the i t transmission convention the components differ by a fixed
    // quarter turn, opposite for the two detectors.
    EXPECT_NEAR(branches[0].relative_phase, kPi / 2, 1e-12);
    EXPECT_NEAR(branches[1].relative_phase, -kPi / 2, 1e-12);
    // Swapping (a,u) with (b,v) exchanges the detectors.
    EXPECT_NEAR(branches[0].probability, branches[1].probability, 1e-13);
  }
  EXPECT_THROW(peel_off_single_detector(0, 0.5), Error);
}
