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

#include <cmath>
#include <string>

#include "nacost/catalog.hpp"
#include "nacost/error.hpp"
#include "nacost/units.hpp"

namespace nacost::transport {

/// An atom held in a harmonic tweezer, moved along a minimal-jerk profile.
struct TransportSpec {
  SpeciesParams species;
  UnitValue trap_frequency;  // omega_0, rad/s
  double heating_budget;     // motional quanta

  TransportSpec(SpeciesParams sp, UnitValue omega0, double budget)
      : species(std::move(sp)), trap_frequency(omega0), heating_budget(budget) {
    require_positive(trap_frequency, Dimension::angular_frequency, "trap frequency");
    if (!(heating_budget > 0.0) || !std::isfinite(heating_budget)) {
      throw DomainError("heating budget must be > 0");
    }
  }
};

/// x_ho = sqrt(hbar / (2 m omega_0)).
inline UnitValue harmonic_length(const TransportSpec& spec) {
  const double m = spec.species.mass.in(Dimension::mass, "mass");
  const double w = spec.trap_frequency.in(Dimension::angular_frequency, "trap frequency");
  return UnitValue::meters(std::sqrt(constants::hbar / (2.0 * m * w)));
}

namespace detail {
// 2^(1/2) 15^(1/3)
inline const double kMinimalJerkPrefactor = std::sqrt(2.0) * std::cbrt(15.0);

inline void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be > 0");
}
}  // namespace detail

/// Time to move a distance R while adding delta_n motional quanta:
///   t = 2^(1/2) 15^(1/3) R^(1/3) / (delta_n^(1/6) x_ho^(1/3) omega_0)
inline UnitValue minimal_jerk_time(const TransportSpec& spec, const UnitValue& distance,
                                   double delta_n) {
  const double r = distance.in(Dimension::length, "move distance");
  detail::check_positive(r, "move distance");
  detail::check_positive(delta_n, "heating increment delta_n");
  const double x_ho = harmonic_length(spec).magnitude();
  const double w = spec.trap_frequency.magnitude();
  return UnitValue::seconds(detail::kMinimalJerkPrefactor * std::cbrt(r) /
                            (std::pow(delta_n, 1.0 / 6.0) * std::cbrt(x_ho) * w));
}

/// Heating incurred by a minimal-jerk move of `distance` lasting `duration`;
/// the exact inverse of minimal_jerk_time.
inline double heating_for_time(const TransportSpec& spec, const UnitValue& distance,
                               const UnitValue& duration) {
  const double r = distance.in(Dimension::length, "move distance");
  const double t = duration.in(Dimension::time, "move duration");
  detail::check_positive(r, "move distance");
  detail::check_positive(t, "move duration");
  const double x_ho = harmonic_length(spec).magnitude();
  const double w = spec.trap_frequency.magnitude();
  const double root = detail::kMinimalJerkPrefactor * std::cbrt(r) / (std::cbrt(x_ho) * w * t);
  const double sq = root * root;
  return sq * sq * sq;
}

/// One-dimensional temperature of a thermal oscillator with mean occupation
/// <n>: k_B T = hbar omega_0 / ln(1 + 1/<n>).
inline UnitValue temperature_from_quanta(double mean_n, const UnitValue& trap_frequency) {
  detail::check_positive(mean_n, "mean occupation <n>");
  require_positive(trap_frequency, Dimension::angular_frequency, "trap frequency");
  return UnitValue::kelvin(constants::hbar * trap_frequency.magnitude() /
                           (constants::boltzmann * std::log1p(1.0 / mean_n)));
}

}  // namespace nacost::transport
