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

#pragma once

// Cost landscape for uncorrected circuits: the fidelity of an observable
// decays as exp(-epsilon V_eff) while a tensor-network simulation costs
// C = 2^A with A = sqrt(n) t. With depth t = 1/epsilon, A = sqrt(n)/epsilon.
// All "~" relations are taken with unit prefactors; outputs are model
// estimates.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nacost/error.hpp"

namespace nacost::nisq {

struct CostPoint {
  std::int64_t qubit_count;
  double gate_infidelity;
  std::optional<double> circuit_volume;

  CostPoint(std::int64_t n, double eps, std::optional<double> v_eff = std::nullopt)
      : qubit_count(n), gate_infidelity(eps), circuit_volume(v_eff) {
    if (qubit_count < 1) throw DomainError("qubit count must be >= 1");
    if (!(gate_infidelity > 0.0 && gate_infidelity < 1.0)) {
      throw DomainError("gate infidelity must lie in (0,1)");
    }
  }
};

inline double effective_fidelity(double epsilon, double v_eff) {
  if (!(epsilon >= 0.0) || !(v_eff >= 0.0)) {
    throw DomainError("effective_fidelity needs epsilon >= 0 and V_eff >= 0");
  }
  return std::exp(-epsilon * v_eff);
}

/// log2 C = sqrt(n) / epsilon.
inline double cost_exponent(const CostPoint& p) {
  return std::sqrt(static_cast<double>(p.qubit_count)) / p.gate_infidelity;
}

/// log2 C = sqrt(n) * depth, for fixed-depth circuits.
inline double cost_exponent(std::int64_t qubit_count, double depth) {
  if (qubit_count < 1) throw DomainError("qubit count must be >= 1");
  if (!(depth > 0.0)) throw DomainError("circuit depth must be > 0");
  return std::sqrt(static_cast<double>(qubit_count)) * depth;
}

/// log10(log10 C) = log10(A log10 2).
inline double double_log_cost(const CostPoint& p) {
  const double log10_c = cost_exponent(p) * std::log10(2.0);
  if (!(log10_c > 1.0)) throw DomainError("cost too small for double-log scale");
  return std::log10(log10_c);
}

enum class Spacing { linear, logarithmic };

struct GridSpec {
  double n_min, n_max;
  double eps_min, eps_max;
  int n_points, eps_points;
  Spacing n_spacing = Spacing::logarithmic;  // epsilon is always logarithmic
};

struct CostCell {
  std::int64_t n;
  double epsilon;
  double loglog_cost;
};

namespace detail {
inline std::vector<double> axis(double lo, double hi, int count, Spacing spacing) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    v[static_cast<std::size_t>(i)] =
        spacing == Spacing::linear ? lo + (hi - lo) * f
                                   : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * f);
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}
}  // namespace detail

/// Row-major grid: n outer, epsilon inner. Qubit counts are rounded to the
/// nearest integer.
inline std::vector<CostCell> cost_grid(const GridSpec& g) {
  if (g.n_points < 2 || g.eps_points < 2) throw ConfigError("grid resolution must be >= 2 per axis");
  if (!(g.n_min >= 1.0 && g.n_max > g.n_min)) throw ConfigError("qubit range must satisfy 1 <= n_min < n_max");
  if (!(g.eps_min > 0.0 && g.eps_max > g.eps_min && g.eps_max < 1.0)) {
    throw ConfigError("infidelity range must satisfy 0 < eps_min < eps_max < 1");
  }
  const auto ns = detail::axis(g.n_min, g.n_max, g.n_points, g.n_spacing);
  const auto es = detail::axis(g.eps_min, g.eps_max, g.eps_points, Spacing::logarithmic);
  std::vector<CostCell> out;
  out.reserve(ns.size() * es.size());
  for (double n_real : ns) {
    const auto n = static_cast<std::int64_t>(std::llround(n_real));
    for (double eps : es) {
      out.push_back(CostCell{n, eps, double_log_cost(CostPoint(n, eps))});
    }
  }
  return out;
}

}  // namespace nacost::nisq
