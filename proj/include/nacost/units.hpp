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
#include <compare>
#include <numbers>
#include <string>
#include <string_view>

#include "nacost/error.hpp"

namespace nacost {

/// The closed set of physical dimensions a UnitValue may carry. Angular and
/// ordinary frequency are distinct: 1 Hz is not 1 rad/s.
enum class Dimension {
  dimensionless,
  time,
  length,
  mass,
  angular_frequency,
  frequency,
  temperature,
  energy,
};

constexpr std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::dimensionless: return "dimensionless";
    case Dimension::time: return "time [s]";
    case Dimension::length: return "length [m]";
    case Dimension::mass: return "mass [kg]";
    case Dimension::angular_frequency: return "angular frequency [rad/s]";
    case Dimension::frequency: return "frequency [Hz]";
    case Dimension::temperature: return "temperature [K]";
    case Dimension::energy: return "energy [J]";
  }
  return "?";
}

/// SI base symbol used when a value is written without a caller-chosen unit.
constexpr std::string_view base_symbol(Dimension d) {
  switch (d) {
    case Dimension::dimensionless: return "";
    case Dimension::time: return "s";
    case Dimension::length: return "m";
    case Dimension::mass: return "kg";
    case Dimension::angular_frequency: return "Hz";  // written as "2pi x F Hz"
    case Dimension::frequency: return "Hz";
    case Dimension::temperature: return "K";
    case Dimension::energy: return "J";
  }
  return "";
}

namespace constants {
// CODATA 2018 exact / recommended values.
inline constexpr double planck = 6.62607015e-34;                    // J s
inline constexpr double hbar = planck / (2.0 * std::numbers::pi);   // J s
inline constexpr double boltzmann = 1.380649e-23;                   // J/K
inline constexpr double elementary_charge = 1.602176634e-19;        // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12;     // F/m
inline constexpr double bohr_radius = 5.29177210903e-11;            // m
inline constexpr double atomic_mass_unit = 1.66053906660e-27;       // kg
inline constexpr double two_pi = 2.0 * std::numbers::pi;
}  // namespace constants

/// A finite magnitude in base SI together with its dimension.
///
/// Arithmetic is only defined between values of the same dimension, plus
/// scaling by plain numbers. There is no derived-unit algebra: products of
/// two dimensional values are formed by the model code on raw magnitudes
/// after each input has been checked with `in()`.
class UnitValue {
 public:
  constexpr UnitValue() = default;

  UnitValue(double magnitude, Dimension dimension)
      : magnitude_(magnitude), dimension_(dimension) {
    if (!std::isfinite(magnitude)) {
      throw DomainError("non-finite magnitude for " +
                        std::string(dimension_name(dimension)));
    }
  }

  static UnitValue scalar(double v) { return {v, Dimension::dimensionless}; }
  static UnitValue seconds(double v) { return {v, Dimension::time}; }
  static UnitValue meters(double v) { return {v, Dimension::length}; }
  static UnitValue kilograms(double v) { return {v, Dimension::mass}; }
  static UnitValue rad_per_s(double v) { return {v, Dimension::angular_frequency}; }
  static UnitValue hertz(double v) { return {v, Dimension::frequency}; }
  static UnitValue kelvin(double v) { return {v, Dimension::temperature}; }
  static UnitValue joules(double v) { return {v, Dimension::energy}; }

  constexpr double magnitude() const { return magnitude_; }
  constexpr Dimension dimension() const { return dimension_; }

  /// Magnitude in base SI, after checking the dimension. `what` names the
  /// quantity in the error message.
  double in(Dimension expected, std::string_view what = "value") const {
    require(expected, what);
    return magnitude_;
  }

  const UnitValue& require(Dimension expected,
                           std::string_view what = "value") const {
    if (dimension_ != expected) {
      throw DimensionError(std::string(what) + ": expected " +
                           std::string(dimension_name(expected)) + ", got " +
                           std::string(dimension_name(dimension_)));
    }
    return *this;
  }

  UnitValue operator-() const { return {-magnitude_, dimension_}; }

  friend UnitValue operator+(const UnitValue& a, const UnitValue& b) {
    b.require(a.dimension_, "addition operand");
    return {a.magnitude_ + b.magnitude_, a.dimension_};
  }
  friend UnitValue operator-(const UnitValue& a, const UnitValue& b) {
    b.require(a.dimension_, "subtraction operand");
    return {a.magnitude_ - b.magnitude_, a.dimension_};
  }
  friend UnitValue operator*(const UnitValue& a, double k) {
    return {a.magnitude_ * k, a.dimension_};
  }
  friend UnitValue operator*(double k, const UnitValue& a) { return a * k; }
  friend UnitValue operator/(const UnitValue& a, double k) {
    return {a.magnitude_ / k, a.dimension_};
  }
  /// Ratio of two like quantities.
  friend double operator/(const UnitValue& a, const UnitValue& b) {
    b.require(a.dimension_, "division operand");
    return a.magnitude_ / b.magnitude_;
  }

  UnitValue& operator+=(const UnitValue& o) { return *this = *this + o; }

  friend std::partial_ordering operator<=>(const UnitValue& a,
                                           const UnitValue& b) {
    b.require(a.dimension_, "comparison operand");
    return a.magnitude_ <=> b.magnitude_;
  }
  friend bool operator==(const UnitValue& a, const UnitValue& b) {
    return a.dimension_ == b.dimension_ && a.magnitude_ == b.magnitude_;
  }

 private:
  double magnitude_ = 0.0;
  Dimension dimension_ = Dimension::dimensionless;
};

/// Ordinary frequency F [Hz] to angular frequency 2*pi*F [rad/s].
inline UnitValue to_angular(const UnitValue& f) {
  return UnitValue::rad_per_s(constants::two_pi * f.in(Dimension::frequency, "frequency"));
}

/// Shorthand for the "2pi x F" literals used throughout: F given in Hz.
inline UnitValue two_pi_times_hz(double hz) {
  return UnitValue::rad_per_s(constants::two_pi * hz);
}

inline void require_positive(const UnitValue& v, Dimension d, std::string_view what) {
  if (v.in(d, what) <= 0.0) {
    throw DomainError(std::string(what) + " must be > 0");
  }
}

}  // namespace nacost
