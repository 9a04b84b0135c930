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

// Dense state-vector register for the qubit-circuit picture of an
// interferometer. Qubit 0 is the most significant bit of the amplitude index.

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace rosetta::qubits {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultQubitCap = 20;

std::size_t qubit_cap();
void set_qubit_cap(std::size_t cap);

struct Hadamard {
  std::size_t qubit;
};
struct Phase {
  std::size_t qubit;
  double phi;
};
struct Cnot {
  std::size_t control;
  std::size_t target;
};

using Gate = std::variant<Hadamard, Phase, Cnot>;

class QubitRegister {
 public:
  /// |0...0> on n qubits, 1 <= n <= qubit_cap().
  explicit QubitRegister(std::size_t n);
  /// Takes ownership of explicit amplitudes; length must be 2^n and the
  /// vector must be normalized within 1e-12.
  QubitRegister(std::size_t n, std::vector<Complex> amplitudes);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::size_t index) const { return amps_.at(index); }
  double norm_squared() const;

  /// Bit mask selecting qubit q within an amplitude index.
  std::size_t mask(std::size_t q) const { return std::size_t{1} << (n_ - 1 - q); }

 private:
  friend QubitRegister apply_gate(QubitRegister reg, const Gate& gate);

  std::size_t n_;
  std::vector<Complex> amps_;
};

QubitRegister apply_gate(QubitRegister reg, const Gate& gate);

/// P(1) after H, Phase(phi), H on |0>.
double rosetta_fringe(double phi);

/// H on qubit 0, then CNOT(0, k) for k = 1..n-1.
QubitRegister make_ghz(std::size_t n);

/// <A_N> with A_N = |1...1><0...0| + |0...0><1...1|.
/// Fails when more than 1e-10 of the weight lies outside span{|0...0>, |1...1>}.
double expect_AN(const QubitRegister& reg);

double fidelity(const QubitRegister& a, const QubitRegister& b);

}  // namespace rosetta::qubits
