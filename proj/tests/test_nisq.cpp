// Copyright 2026 The nacost Authors
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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "nacost/nisq.hpp"

namespace nacost::nisq {
namespace {

TEST(EffectiveFidelity, Examples) {
  EXPECT_EQ(effective_fidelity(0.0, 1e9), 1.0);
  EXPECT_NEAR(effective_fidelity(0.001, 1000.0), 0.3679, 1e-4);
  EXPECT_NEAR(effective_fidelity(0.001, 693.0), 0.50, 1e-3);
  EXPECT_THROW(effective_fidelity(-0.1, 1.0), DomainError);
  EXPECT_THROW(effective_fidelity(0.1, -1.0), DomainError);
}

TEST(EffectiveFidelity, Multiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double eps = 0.01 * u(rng), v1 = 500 * u(rng), v2 = 500 * u(rng);
    const double lhs = effective_fidelity(eps, v1 + v2);
    EXPECT_NEAR(lhs, effective_fidelity(eps, v1) * effective_fidelity(eps, v2), 1e-15);
  }
}

TEST(CostExponent, Examples) {
  EXPECT_NEAR(cost_exponent(CostPoint(100, 0.001)), 1e4, 1e-8);
  EXPECT_NEAR(cost_exponent(CostPoint(400, 0.001)), 2e4, 1e-8);
  EXPECT_EQ(cost_exponent(int64_t{1}, 1.0), 1.0);
  EXPECT_EQ(cost_exponent(int64_t{100}, 50.0), 500.0);
  EXPECT_THROW(CostPoint(0, 0.01), DomainError);
  EXPECT_THROW(CostPoint(10, 1.0), DomainError);
  EXPECT_THROW(CostPoint(10, 0.0), DomainError);
}

TEST(DoubleLogCost, Examples) {
  EXPECT_NEAR(double_log_cost(CostPoint(100, 0.001)), 3.479, 1e-3);
  EXPECT_NEAR(double_log_cost(CostPoint(100, 0.01)), 2.479, 1e-3);
  EXPECT_NEAR(double_log_cost(CostPoint(1000, 0.001)), 3.978, 1e-3);
  EXPECT_THROW(double_log_cost(CostPoint(1, 0.5)), DomainError);
}

TEST(DoubleLogCost, ExactIdentities) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> le(-5.0, -2.0);
  std::uniform_int_distribution<int> n(1, 100000);
  for (int i = 0; i < 1000; ++i) {
    const double eps = std::pow(10.0, le(rng));
    const std::int64_t k = n(rng);
    EXPECT_NEAR(double_log_cost(CostPoint(k, eps)) - double_log_cost(CostPoint(k, 10 * eps)), 1.0, 1e-12);
    EXPECT_NEAR(double_log_cost(CostPoint(4 * k, eps)) - double_log_cost(CostPoint(k, eps)), std::log10(2.0),
                1e-12);
  }
}

TEST(CostGrid, Structure) {
  const GridSpec spec{10, 1000, 1e-4, 1e-2, 50, 50};
  const auto grid = cost_grid(spec);
  ASSERT_EQ(grid.size(), 2500u);
  EXPECT_EQ(grid.front().n, 10);
  EXPECT_EQ(grid.back().n, 1000);
  EXPECT_EQ(grid.front().epsilon, 1e-4);
  EXPECT_EQ(grid[49].epsilon, 1e-2);
  for (std::size_t row = 0; row < 50; ++row) {
    for (std::size_t col = 0; col + 1 < 50; ++col) {
      const auto& a = grid[row * 50 + col];
      const auto& b = grid[row * 50 + col + 1];
      EXPECT_EQ(a.n, b.n);
      EXPECT_NEAR(a.loglog_cost - b.loglog_cost, std::log10(b.epsilon / a.epsilon), 1e-12);
    }
  }
}

TEST(CostGrid, PointConsistencyAndSlopes) {
  const GridSpec spec{100, 1000, 1e-3, 1e-2, 2, 2, Spacing::linear};
  const auto grid = cost_grid(spec);
  ASSERT_EQ(grid.size(), 4u);
  EXPECT_NEAR(grid[0].loglog_cost, double_log_cost(CostPoint(100, 0.001)), 1e-12);
  // d/dlog(eps) = -1, d/dlog(n) = 0.5: contours lie close to the n axis.
  EXPECT_NEAR(grid[1].loglog_cost - grid[0].loglog_cost, -1.0, 1e-12);
  EXPECT_NEAR(grid[2].loglog_cost - grid[0].loglog_cost, 0.5, 1e-12);
}

TEST(CostGrid, ConfigErrors) {
  EXPECT_THROW(cost_grid(GridSpec{10, 1000, 1e-4, 1e-2, 1, 50}), ConfigError);
  EXPECT_THROW(cost_grid(GridSpec{1000, 10, 1e-4, 1e-2, 5, 5}), ConfigError);
  EXPECT_THROW(cost_grid(GridSpec{10, 1000, 1e-2, 1e-4, 5, 5}), ConfigError);
  EXPECT_THROW(cost_grid(GridSpec{0, 1000, 1e-4, 1e-2, 5, 5}), ConfigError);
}

}  // namespace
}  // namespace nacost::nisq
