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

#include "rosetta/qubits.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "rosetta/error.hpp"

namespace rosetta::qubits {
namespace {

std::atomic<std::size_t> g_qubit_cap{kDefaultQubitCap};

void check_count(std::size_t n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "register needs at least one qubit");
  if (n > qubit_cap()) {
    fail(ErrorCode::kCapacityExceeded,
         "qubit count " + std::to_string(n) + " exceeds cap " + std::to_string(qubit_cap()));
  }
}

void check_qubit(const QubitRegister& reg, std::size_t q) {
  if (q >= reg.num_qubits()) {
    fail(ErrorCode::kOutOfRange,
         "qubit index " + std::to_string(q) + " out of range for " + std::to_string(reg.num_qubits()) + " qubits");
  }
}

}  // namespace

std::size_t qubit_cap() { return g_qubit_cap.load(std::memory_order_relaxed); }

void set_qubit_cap(std::size_t cap) {
  if (cap == 0 || cap > 30) fail(ErrorCode::kInvalidArgument, "qubit cap must lie in [1, 30]");
  g_qubit_cap.store(cap, std::memory_order_relaxed);
}

QubitRegister::QubitRegister(std::size_t n) : n_(n) {
  check_count(n);
  amps_.assign(std::size_t{1} << n, Complex{});
  amps_[0] = 1.0;
}

QubitRegister::QubitRegister(std::size_t n, std::vector<Complex> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  check_count(n);
  if (amps_.size() != (std::size_t{1} << n)) fail(ErrorCode::kInvalidArgument, "amplitude vector must have length 2^n");
  if (std::abs(norm_squared() - 1.0) > 1e-12) fail(ErrorCode::kInvalidArgument, "register amplitudes must be normalized");
}

double QubitRegister::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return sum;
}

QubitRegister apply_gate(QubitRegister reg, const Gate& gate) {
  auto& amps = reg.amps_;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Hadamard>) {
          check_qubit(reg, g.qubit);
          const std::size_t bit = reg.mask(g.qubit);
          const double s = std::numbers::sqrt2 / 2.0;
          for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & bit) continue;
            const Complex a0 = amps[i];
            const Complex a1 = amps[i | bit];
            amps[i] = s * (a0 + a1);
            amps[i | bit] = s * (a0 - a1);
          }
        } else if constexpr (std::is_same_v<G, Phase>) {
          check_qubit(reg, g.qubit);
          const std::size_t bit = reg.mask(g.qubit);
          const Complex phase = std::polar(1.0, g.phi);
          for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & bit) amps[i] *= phase;
          }
        } else {
          check_qubit(reg, g.control);
          check_qubit(reg, g.target);
          if (g.control == g.target) fail(ErrorCode::kInvalidArgument, "CNOT control and target must differ");
          const std::size_t control = reg.mask(g.control);
          const std::size_t target = reg.mask(g.target);
          for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & control) && !(i & target)) std::swap(amps[i], amps[i | target]);
          }
        }
      },
      gate);
  return reg;
}

double rosetta_fringe(double phi) {
  QubitRegister reg(1);
  reg = apply_gate(std::move(reg), Hadamard{0});
  reg = apply_gate(std::move(reg), Phase{0, phi});
  reg = apply_gate(std::move(reg), Hadamard{0});
  return std::norm(reg.amplitude(1));
}

QubitRegister make_ghz(std::size_t n) {
  QubitRegister reg(n);
  reg = apply_gate(std::move(reg), Hadamard{0});
  for (std::size_t k = 1; k < n; ++k) reg = apply_gate(std::move(reg), Cnot{0, k});
  return reg;
}

double expect_AN(const QubitRegister& reg) {
  const Complex zeros = reg.amplitudes().front();
  const Complex ones = reg.amplitudes().back();
  const double inside = std::norm(zeros) + std::norm(ones);
  if (reg.norm_squared() - inside > 1e-10) {
    fail(ErrorCode::kDomain, "register has weight outside span{|0...0>, |1...1>}");
  }
  return 2.0 * (std::conj(zeros) * ones).real();
}

double fidelity(const QubitRegister& a, const QubitRegister& b) {
  if (a.num_qubits() != b.num_qubits()) fail(ErrorCode::kInvalidArgument, "registers have different sizes");
  Complex overlap{};
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

}  // namespace rosetta::qubits
