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

#include "rosetta/golden_section.hpp"

#include <cmath>

#include "gtest/gtest.h"

using rosetta::golden_section_maximize;
using rosetta::GoldenSectionOptions;

TEST(GoldenSection, FindsInteriorMaximum) {
  const double x = golden_section_maximize([](double v) { return -(v - 0.3) * (v - 0.3); }, 0.0, 1.0);
  EXPECT_NEAR(x, 0.3, 1e-8);
}

TEST(GoldenSection, NeverEvaluatesEndpoints) {
  int calls = 0;
  auto f = [&](double v) {
    ++calls;
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1.0);
    return std::log(v) + std::log(1.0 - v);
  };
  EXPECT_NEAR(golden_section_maximize(f, 0.0, 1.0), 0.5, 1e-8);
  EXPECT_LT(calls, 60);
}

TEST(GoldenSection, RespectsIterationLimit) {
  int calls = 0;
  auto f = [&](double v) {
    ++calls;
    return -v * v;
  };
  golden_section_maximize(f, -1.0, 2.0, GoldenSectionOptions{1e-300, 10});
  EXPECT_EQ(calls, 12);
}

TEST(GoldenSection, MaximumAtBoundaryConvergesToIt) {
  EXPECT_NEAR(golden_section_maximize([](double v) { return v; }, 0.0, 1.0), 1.0, 1e-8);
}
