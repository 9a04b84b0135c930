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

// Independent reference computations used only by tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "rosetta/fock.hpp"

namespace rosetta::oracle {

using Complex = std::complex<double>;

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Permanent by summing over every permutation. Fine for n <= 8.
inline Complex permanent(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex sum{};
  do {
    Complex term{1.0, 0.0};
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// <out| U |in> for a linear-optical network whose creation operators map as
/// a_i^dag -> sum_j modes(i, j) a_j^dag.
inline Complex transition_amplitude(const Eigen::MatrixXcd& modes, const std::vector<int>& in,
                                    const std::vector<int>& out) {
  std::vector<int> rows, cols;
  double norm = 1.0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    rows.insert(rows.end(), in[i], static_cast<int>(i));
    norm *= factorial(in[i]);
  }
  for (std::size_t j = 0; j < out.size(); ++j) {
    cols.insert(cols.end(), out[j], static_cast<int>(j));
    norm *= factorial(out[j]);
  }
  if (rows.size() != cols.size()) return {};
  if (rows.empty()) return {1.0, 0.0};
  Eigen::MatrixXcd sub(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = modes(rows[r], cols[c]);
  }
  return permanent(sub) / std::sqrt(norm);
}

/// Mode matrix of a (t, r) splitter acting on modes (a, b) of an m-mode network.
inline Eigen::MatrixXcd splitter_matrix(std::size_t modes, double t, double r, std::size_t a, std::size_t b) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(modes, modes);
  m(a, a) = Complex(0.0, t);
  m(b, b) = Complex(0.0, t);
  m(a, b) = r;
  m(b, a) = r;
  return m;
}

/// All occupation vectors of `photons` over `modes` modes.
inline std::vector<std::vector<int>> enumerate_kets(std::size_t modes, int photons) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(modes, 0);
  auto recurse = [&](auto&& self, std::size_t mode, int left) -> void {
    if (mode + 1 == modes) {
      current[mode] = left;
      out.push_back(current);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      current[mode] = k;
      self(self, mode + 1, left - k);
    }
  };
  recurse(recurse, 0, photons);
  return out;
}

/// Closed-form two-fold coincidence probability of the peel-off device.
inline double peel_off_probability(int n, double r2) {
  return 0.5 * n * (n - 1.0) * r2 * r2 * std::pow(1.0 - r2, 2 * n - 2);
}

/// Phase-insensitive fidelity computed directly from raw amplitude maps.
inline double overlap_fidelity(const fock::FockState& a, const fock::FockState& b) {
  Complex sum{};
  for (const auto& [ket, amp] : a.amplitudes()) {
    auto it = b.amplitudes().find(ket);
    if (it != b.amplitudes().end()) sum += std::conj(amp) * it->second;
  }
  return std::norm(sum);
}

}  // namespace rosetta::oracle
