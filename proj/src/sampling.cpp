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

#include "rosetta/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <thread>

#include "rosetta/error.hpp"
#include "rosetta/protocols.hpp"

namespace rosetta::sampling {
namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require_normalized(double norm2) {
  if (std::abs(norm2 - 1.0) > 1e-10) fail(ErrorCode::kInvalidArgument, "sampling needs a normalized state");
}

Outcome an_outcome(int sign) { return {MeasurementKind::kANBinary, {sign}}; }

// Outcome table plus the fringe value each outcome contributes to a trial.
struct TrialModel {
  BornSampler sampler;
  std::vector<double> value;
  int draws_per_trial;
};

TrialModel build_model(SchemeKind scheme, int n, double phi) {
  switch (scheme) {
    case SchemeKind::kSeparableQubits: {
      // Measuring sigma_x on (|0> + e^{i phi}|1>)/sqrt(2) = computational
      // measurement after a Hadamard; outcome 0 is the +1 eigenvalue.
      const double s = std::numbers::sqrt2 / 2.0;
      qubits::QubitRegister reg(1, {qubits::Complex(s, 0.0), std::polar(s, phi)});
      reg = qubits::apply_gate(std::move(reg), qubits::Hadamard{0});
      BornSampler sampler(reg, MeasurementKind::kQubitComputational);
      std::vector<double> value;
      for (const Outcome& o : sampler.outcomes()) value.push_back(o.values[0] == 0 ? 1.0 : -1.0);
      return {std::move(sampler), std::move(value), n};
    }
    case SchemeKind::kSingleFockMz: {
      BornSampler sampler(protocols::mach_zehnder(fock::make_fock({n, 0}), phi), MeasurementKind::kModeCounts);
      std::vector<double> value;
      for (const Outcome& o : sampler.outcomes()) value.push_back(static_cast<double>(o.values[1] - o.values[0]) / n);
      return {std::move(sampler), std::move(value), 1};
    }
    case SchemeKind::kNoon: {
      BornSampler sampler(fock::apply_phase_shift(protocols::noon(n), 1, phi), MeasurementKind::kANBinary);
      std::vector<double> value;
      for (const Outcome& o : sampler.outcomes()) value.push_back(static_cast<double>(o.values[0]));
      return {std::move(sampler), std::move(value), 1};
    }
  }
  fail(ErrorCode::kInvalidArgument, "unknown sampling scheme");
}

}  // namespace

std::uint64_t RandomStream::derive_key(std::uint64_t seed, std::uint64_t scheme, std::uint64_t n,
                                       std::uint64_t repetition, std::uint64_t trial) {
  std::uint64_t h = mix64(seed + kGamma);
  for (std::uint64_t part : {scheme, n, repetition, trial}) h = mix64(h ^ mix64(part + kGamma));
  return h;
}

std::uint64_t RandomStream::next() { return mix64(key_ + (++counter_) * kGamma); }

double RandomStream::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

BornSampler::BornSampler(const fock::FockState& state, MeasurementKind kind) {
  require_normalized(state.norm_squared());
  switch (kind) {
    case MeasurementKind::kModeCounts:
      for (const auto& [ket, amp] : state.amplitudes()) {
        outcomes_.push_back({kind, ket.counts()});
        probabilities_.push_back(std::norm(amp));
      }
      break;
    case MeasurementKind::kANBinary: {
      if (state.modes() != 2) fail(ErrorCode::kInvalidArgument, "A_N measurement needs a two-mode state");
      const int n = state.total_photons();
      const fock::Complex low = state.amplitude(fock::OccupationVector{n, 0});
      const fock::Complex high = state.amplitude(fock::OccupationVector{0, n});
      if (state.norm_squared() - std::norm(low) - std::norm(high) > 1e-10) {
        fail(ErrorCode::kDomain, "state has weight outside span{|N,0>, |0,N>}");
      }
      outcomes_ = {an_outcome(+1), an_outcome(-1)};
      probabilities_ = {std::norm(low + high) / 2.0, std::norm(low - high) / 2.0};
      break;
    }
    case MeasurementKind::kQubitComputational:
      fail(ErrorCode::kInvalidArgument, "computational-basis measurement needs a qubit register");
  }
  finish();
}

BornSampler::BornSampler(const qubits::QubitRegister& reg, MeasurementKind kind) {
  require_normalized(reg.norm_squared());
  const auto& amps = reg.amplitudes();
  switch (kind) {
    case MeasurementKind::kQubitComputational:
      for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) continue;
        std::vector<int> bits(reg.num_qubits());
        for (std::size_t q = 0; q < bits.size(); ++q) bits[q] = (i & reg.mask(q)) ? 1 : 0;
        outcomes_.push_back({kind, std::move(bits)});
        probabilities_.push_back(p);
      }
      break;
    case MeasurementKind::kANBinary: {
      const qubits::Complex zeros = amps.front();
      const qubits::Complex ones = amps.back();
      if (reg.norm_squared() - std::norm(zeros) - std::norm(ones) > 1e-10) {
        fail(ErrorCode::kDomain, "register has weight outside span{|0...0>, |1...1>}");
      }
      outcomes_ = {an_outcome(+1), an_outcome(-1)};
      probabilities_ = {std::norm(zeros + ones) / 2.0, std::norm(zeros - ones) / 2.0};
      break;
    }
    case MeasurementKind::kModeCounts:
      fail(ErrorCode::kInvalidArgument, "mode-count measurement needs a Fock state");
  }
  finish();
}

void BornSampler::finish() {
  cumulative_.resize(probabilities_.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) cumulative_[i] = (sum += probabilities_[i]);
}

std::size_t BornSampler::draw_index(RandomStream& stream) const {
  const double u = stream.uniform() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return std::min(static_cast<std::size_t>(it - cumulative_.begin()), cumulative_.size() - 1);
}

const Outcome& BornSampler::draw(RandomStream& stream) const { return outcomes_[draw_index(stream)]; }

Outcome sample_outcome(const fock::FockState& state, MeasurementKind kind, RandomStream& stream) {
  return BornSampler(state, kind).draw(stream);
}

Outcome sample_outcome(const qubits::QubitRegister& reg, MeasurementKind kind, RandomStream& stream) {
  return BornSampler(reg, kind).draw(stream);
}

SchemeKind parse_scheme_kind(const std::string& name) {
  if (name == "separable") return SchemeKind::kSeparableQubits;
  if (name == "single-fock") return SchemeKind::kSingleFockMz;
  if (name == "noon") return SchemeKind::kNoon;
  fail(ErrorCode::kInvalidArgument, "unknown sampling scheme '" + name + "'");
}

std::string to_string(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::kSeparableQubits: return "separable";
    case SchemeKind::kSingleFockMz: return "single-fock";
    case SchemeKind::kNoon: return "noon";
  }
  return "unknown";
}

double operating_point(SchemeKind scheme, int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "need N >= 1");
  return scheme == SchemeKind::kNoon ? std::numbers::pi / (2.0 * n) : std::numbers::pi / 2.0;
}

PhaseEstimate estimate_phase(const TrialConfig& config) {
  if (config.trials < 1) fail(ErrorCode::kInvalidArgument, "trials must be positive");
  if (config.repetitions < 2) fail(ErrorCode::kInvalidArgument, "need at least two repetitions");
  if (config.photons < 1) fail(ErrorCode::kInvalidArgument, "need N >= 1");
  const int n = config.photons;
  const double divisor = config.scheme == SchemeKind::kNoon ? static_cast<double>(n) : 1.0;
  const double branch = config.true_phi * divisor;
  if (!(branch > 0.0 && branch < std::numbers::pi)) {
    fail(ErrorCode::kInvalidArgument, "true phase lies outside the invertible branch of the fringe");
  }

  const TrialModel model = build_model(config.scheme, n, config.true_phi);
  const auto scheme_id = static_cast<std::uint64_t>(config.scheme);
  const auto reps = static_cast<std::size_t>(config.repetitions);
  std::vector<double> estimates(reps);
  std::vector<char> saturated(reps, 0);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t rep = begin; rep < end; ++rep) {
      double total = 0.0;
      for (int trial = 0; trial < config.trials; ++trial) {
        RandomStream stream(RandomStream::derive_key(config.seed, scheme_id, static_cast<std::uint64_t>(n), rep,
                                                     static_cast<std::uint64_t>(trial)));
        double x = 0.0;
        for (int d = 0; d < model.draws_per_trial; ++d) x += model.value[model.sampler.draw_index(stream)];
        total += x / model.draws_per_trial;
      }
      double mean = total / config.trials;
      if (std::abs(mean) >= 1.0) {
        saturated[rep] = 1;
        mean = std::clamp(mean, -1.0, 1.0);
      }
      estimates[rep] = std::acos(mean) / divisor;
    }
  };

  unsigned workers = config.workers != 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, reps));
  if (workers <= 1) {
    run_range(0, reps);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (reps + workers - 1) / workers;
    for (std::size_t begin = 0; begin < reps; begin += chunk) {
      pool.emplace_back(run_range, begin, std::min(reps, begin + chunk));
    }
  }

  PhaseEstimate out;
  double sum = 0.0;
  for (double e : estimates) sum += e;
  out.phi_hat = sum / static_cast<double>(reps);
  double ss = 0.0;
  for (double e : estimates) ss += (e - out.phi_hat) * (e - out.phi_hat);
  out.raw_std = std::sqrt(ss / static_cast<double>(reps - 1));
  out.delta_phi = out.raw_std * std::sqrt(static_cast<double>(config.trials));
  out.saturated = static_cast<std::size_t>(std::count(saturated.begin(), saturated.end(), 1));
  out.saturated_fraction = static_cast<double>(out.saturated) / static_cast<double>(reps);
  out.misconfigured = out.saturated_fraction >= 0.01;
  return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) fail(ErrorCode::kInvalidArgument, "fit needs equally many x and y values");
  const std::size_t n = x.size();
  if (n < 2) fail(ErrorCode::kInvalidArgument, "fit needs at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) fail(ErrorCode::kInvalidArgument, "fit needs at least two distinct x values");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - fit.intercept - fit.slope * x[i];
      ssr += r * r;
    }
    fit.slope_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  }
  return fit;
}

ScalingResult scaling_experiment(SchemeKind scheme, std::span<const int> n_values, const TrialConfig& config) {
  const std::set<int> distinct(n_values.begin(), n_values.end());
  if (distinct.size() < 4) fail(ErrorCode::kInvalidArgument, "scaling needs at least four distinct N values");
  if (*distinct.begin() < 1) fail(ErrorCode::kInvalidArgument, "N values must be positive");
  if (*distinct.rbegin() < 8 * *distinct.begin()) {
    fail(ErrorCode::kInvalidArgument, "N values must span at least a factor of 8");
  }

  ScalingResult result;
  std::vector<double> log_n, log_dphi;
  for (int n : n_values) {
    TrialConfig run = config;
    run.scheme = scheme;
    run.photons = n;
    run.true_phi = operating_point(scheme, n);
    const PhaseEstimate estimate = estimate_phase(run);
    if (!(estimate.delta_phi > 0.0)) fail(ErrorCode::kDomain, "empirical delta_phi must be positive");
    result.n_values.push_back(n);
    result.delta_phi_empirical.push_back(estimate.delta_phi);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_dphi.push_back(std::log(estimate.delta_phi));
  }
  const LineFit fit = fit_line(log_n, log_dphi);
  result.fitted_exponent = fit.slope;
  result.exponent_stderr = fit.slope_stderr;
  return result;
}

}  // namespace rosetta::sampling
