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

#include <array>
#include <cmath>

namespace rosetta::detail {

// Above this photon count factorials go through lgamma.
inline constexpr int kExactFactorialLimit = 20;

inline double factorial(int n) {
  static const std::array<double, kExactFactorialLimit + 1> table = [] {
    std::array<double, kExactFactorialLimit + 1> t{};
    t[0] = 1.0;
    for (int i = 1; i <= kExactFactorialLimit; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  if (n <= kExactFactorialLimit) return table[n];
  return std::exp(std::lgamma(n + 1.0));
}

inline double log_factorial(int n) {
  if (n <= kExactFactorialLimit) return std::log(factorial(n));
  return std::lgamma(n + 1.0);
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= kExactFactorialLimit) return factorial(n) / (factorial(k) * factorial(n - k));
  return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

}  // namespace rosetta::detail
