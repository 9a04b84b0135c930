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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rosetta/estimation.hpp"
#include "rosetta/fock.hpp"
#include "rosetta/protocols.hpp"
#include "rosetta/qubits.hpp"
#include "rosetta/sampling.hpp"

using namespace rosetta;
using fock::FockState;
using fock::OccupationVector;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Outcome variance_catalog() {
  double worst = 0.0;
  for (int n = 1; n <= 30; ++n) {
    const auto cat = estimation::variance_catalog(n);
    worst = std::max(worst, std::abs(cat.uniform.variance - (n * n / 4.0 + n / 2.0) / 3.0));
    worst = std::max(worst, std::abs(cat.extreme.variance - n * n / 4.0));
    worst = std::max(worst, std::abs(cat.binomial.variance - n / 4.0));
  }
  return {worst < 1e-10, fmt("N=1..30 max |error|=%.3g", worst)};
}

Outcome shot_noise() {
  double worst = 0.0;
  const double s = std::numbers::sqrt2 / 2.0;
  for (int n = 1; n <= 100; ++n) {
    auto family = [n, s](double phi) {
      return estimation::SeparableQubits{qubits::QubitRegister(1, {qubits::Complex(s, 0.0), std::polar(s, phi)}),
                                         static_cast<std::size_t>(n)};
    };
    const auto r = estimation::sensitivity_analytic(family, estimation::Observable::collective_a(), kPi / 2,
                                                    [n](double phi) { return -n * std::sin(phi); });
    worst = std::max(worst, std::abs(r.delta_phi - 1.0 / std::sqrt(n)));
  }
  return {worst < 1e-9, fmt("N=1..100 at phi=pi/2 max |dphi - 1/sqrt(N)|=%.3g", worst)};
}

Outcome heisenberg() {
  double fringe_err = 0.0, dphi_err = 0.0;
  const auto grid = protocols::phase_grid(25, 0.0, 2 * kPi);
  for (int n = 1; n <= 20; ++n) {
    const FockState noon = protocols::noon(n);
    const qubits::QubitRegister ghz = qubits::make_ghz(n);
    for (double phi : grid) {
      qubits::QubitRegister reg = ghz;
      for (int q = 0; q < n; ++q) reg = qubits::apply_gate(std::move(reg), qubits::Phase{static_cast<std::size_t>(q), phi});
      fringe_err = std::max(fringe_err, std::abs(qubits::expect_AN(reg) - std::cos(n * phi)));
      const double e = estimation::expectation(fock::apply_phase_shift(noon, 1, phi), estimation::Observable::an());
      fringe_err = std::max(fringe_err, std::abs(e - std::cos(n * phi)));
    }
    const double op = kPi / (2 * n);
    for (auto scheme : {estimation::Scheme::kGhz, estimation::Scheme::kNoon}) {
      dphi_err = std::max(dphi_err, std::abs(estimation::scheme_sensitivity(scheme, n, op).delta_phi - 1.0 / n));
    }
  }
  return {fringe_err < 1e-12 && dphi_err < 1e-9,
          fmt("GHZ+NOON N=1..20 fringe max err=%.3g, max |dphi - 1/N|=%.3g", fringe_err, dphi_err)};
}

Outcome hom_dip() {
  const FockState out = protocols::hom_entangle();
  const double coincidence = std::norm(out.amplitude(OccupationVector{1, 1}));
  const double f = fock::fidelity(out, protocols::noon(2));
  return {coincidence < 1e-14 && f >= 1.0 - 1e-12, fmt("P(1,1)=%.3g fidelity vs NOON-2=%.15f", coincidence, f)};
}

Outcome peel_off() {
  double prob_err = 0.0, worst_fid = 1.0;
  for (int n = 2; n <= 12; ++n) {
    for (double r2 : {0.1, 1.0 / n, 0.5, 0.9}) {
      const auto res = protocols::peel_off(n, r2);
      prob_err = std::max(prob_err, std::abs(res.success_probability - oracle::peel_off_probability(n, r2)));
      worst_fid = std::min(worst_fid, fock::fidelity(res.conditional_state, protocols::peel_off_target(n)));
    }
  }
  return {prob_err < 1e-10 && worst_fid >= 1.0 - 1e-10,
          fmt("N=2..12 x 4 r2 max |P - closed form|=%.3g min fidelity=%.15f", prob_err, worst_fid)};
}

Outcome optimal_reflectivity() {
  double worst = 0.0;
  bool fallback = false;
  for (int n = 2; n <= 12; ++n) {
    const auto opt = protocols::optimal_reflectivity(n);
    worst = std::max(worst, std::abs(opt.r2_star - 1.0 / n));
    fallback = fallback || opt.grid_fallback;
  }
  const double limit = 0.5 * std::exp(-2.0);
  const double p100 = oracle::peel_off_probability(100, 0.01);
  const double rel = std::abs(p100 - limit) / limit;
  return {worst < 1e-6 && rel < 0.01,
          fmt("N=2..12 max |r2* - 1/N|=%.3g%s; P(N=100)=%.7f vs 1/(2e^2)=%.7f (rel %.3g)", worst,
              fallback ? " (grid fallback)" : "", p100, limit, rel)};
}

Outcome rosetta_equivalence() {
  const auto cmp = protocols::compare_rosetta(101);
  return {cmp.phi.size() == 101 && cmp.max_abs_difference < 1e-10,
          fmt("101 points offset=%.12f max |diff|=%.3g", cmp.offset, cmp.max_abs_difference)};
}

Outcome schwinger_equivalence() {
  double worst = 1.0;
  std::size_t kets = 0;
  for (double phi : {0.0, 0.37, 1.9, kPi}) {
    for (int n = 0; n <= 20; ++n) {
      for (int k = 0; k <= n; ++k) {
        const FockState in = fock::make_fock({n - k, k});
        FockState a = fock::apply_beam_splitter(in, fock::BeamSplitter::balanced(), 0, 1);
        a = fock::apply_phase_shift(a, 0, phi);
        a = fock::apply_beam_splitter(a, fock::BeamSplitter::balanced(), 0, 1);
        FockState b = fock::schwinger_rotation(in, fock::Axis::kX, kPi / 2);
        b = fock::schwinger_rotation(b, fock::Axis::kZ, phi);
        b = fock::schwinger_rotation(b, fock::Axis::kX, kPi / 2);
        worst = std::min(worst, fock::fidelity(a, b));
        ++kets;
      }
    }
  }
  return {worst >= 1.0 - 1e-10, fmt("%zu kets (N<=20, 4 phases) min fidelity=%.15f", kets, worst)};
}

Outcome lithography() {
  const auto grid = protocols::phase_grid();
  double noon_err = 0.0, classical_err = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const auto curve = protocols::deposition_rate(protocols::noon(n), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      noon_err = std::max(noon_err, std::abs(curve.normalized_rate[i] - (1.0 + std::cos(n * grid[i])) / 2.0));
    }
  }
  const auto two = protocols::uncorrelated_deposition(protocols::deposition_rate(protocols::noon(1), grid), 2);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double single = (1.0 + std::cos(grid[i])) / 2.0;
    classical_err = std::max(classical_err, std::abs(two.normalized_rate[i] - single * single));
  }
  return {noon_err < 1e-9 && classical_err < 1e-9,
          fmt("NOON N=1..5 max err=%.3g, uncorrelated two-photon max err=%.3g", noon_err, classical_err)};
}

Outcome monte_carlo_scaling() {
  sampling::TrialConfig cfg;
  cfg.repetitions = 10000;
  cfg.trials = 100;
  cfg.seed = 20260101;
  const int shot_ns[] = {1, 2, 4, 8, 16};
  const int noon_ns[] = {2, 4, 8, 16};
  const auto sep = sampling::scaling_experiment(sampling::SchemeKind::kSeparableQubits, shot_ns, cfg);
  const auto single = sampling::scaling_experiment(sampling::SchemeKind::kSingleFockMz, shot_ns, cfg);
  const auto noon = sampling::scaling_experiment(sampling::SchemeKind::kNoon, noon_ns, cfg);

  double dual = 0.0;
  for (int n : {1, 2, 4, 8}) {
    const FockState in = protocols::dual_fock(n);
    for (double phi : protocols::phase_grid(73)) {
      dual = std::max(dual, std::abs(estimation::expectation(protocols::mach_zehnder(in, phi), estimation::Observable::jz())));
    }
  }
  const bool pass = std::abs(sep.fitted_exponent + 0.5) <= 0.1 && std::abs(single.fitted_exponent + 0.5) <= 0.1 &&
                    std::abs(noon.fitted_exponent + 1.0) <= 0.1 && dual < 1e-10;
  return {pass, fmt("exponents separable=%.4f single-fock=%.4f noon=%.4f; dual-Fock max |<Jz>|=%.3g",
                    sep.fitted_exponent, single.fitted_exponent, noon.fitted_exponent, dual)};
}

Outcome yurke_scaling() {
  // Open interval: at phi = 0 and pi the derivative vanishes exactly.
  std::vector<double> grid;
  const int points = 720;
  for (int i = 0; i < points; ++i) grid.push_back(kPi * (i + 0.5) / points);
  std::vector<double> log_n, log_d;
  std::string values;
  for (int n : {3, 5, 9, 17}) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : estimation::sensitivity_scan(estimation::Scheme::kYurke, n, grid)) {
      if (!r.divergent) best = std::min(best, r.delta_phi);
    }
    log_n.push_back(std::log(n));
    log_d.push_back(std::log(best));
    values += fmt(" N=%d:%.5f", n, best);
  }
  const auto fit = sampling::fit_line(log_n, log_d);
  return {std::abs(fit.slope + 1.0) <= 0.15, fmt("fitted exponent=%.4f;%s", fit.slope, values.c_str())};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "variance catalog", 1.0, variance_catalog},
      {2, "shot-noise limit", 1.0, shot_noise},
      {3, "Heisenberg limit", 5.0, heisenberg},
      {4, "HOM dip", 1.0, hom_dip},
      {5, "peel-off coincidence", 30.0, peel_off},
      {6, "optimal reflectivity", 10.0, optimal_reflectivity},
      {7, "Rosetta equivalence", 1.0, rosetta_equivalence},
      {8, "Schwinger/Fock equivalence", 5.0, schwinger_equivalence},
      {9, "lithography fringes", 1.0, lithography},
      {10, "Monte Carlo scaling", 120.0, monte_carlo_scaling},
      {11, "Yurke-state sensitivity", 10.0, yurke_scaling},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] AC%02d %-28s %s (%.3f s / %.0f s budget%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
