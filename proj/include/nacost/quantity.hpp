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

// Text form of UnitValue: a deliberately tiny, case-sensitive grammar
//
//   quantity := [ "2pi" "x" ] NUMBER UNIT
//
// with optional whitespace between tokens. The "2pi x" prefix is only legal
// in front of a frequency unit and turns F into the angular frequency 2*pi*F.

#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

#include "nacost/error.hpp"
#include "nacost/units.hpp"

namespace nacost {

struct UnitSymbol {
  std::string_view symbol;
  double scale;  // base SI per unit
  Dimension dimension;
};

inline constexpr std::array<UnitSymbol, 17> kUnitTable{{
    {"s", 1.0, Dimension::time},
    {"ms", 1e-3, Dimension::time},
    {"us", 1e-6, Dimension::time},
    {"ns", 1e-9, Dimension::time},
    {"m", 1.0, Dimension::length},
    {"mm", 1e-3, Dimension::length},
    {"um", 1e-6, Dimension::length},
    {"nm", 1e-9, Dimension::length},
    {"kg", 1.0, Dimension::mass},
    {"u", constants::atomic_mass_unit, Dimension::mass},
    {"Hz", 1.0, Dimension::frequency},
    {"kHz", 1e3, Dimension::frequency},
    {"MHz", 1e6, Dimension::frequency},
    {"GHz", 1e9, Dimension::frequency},
    {"K", 1.0, Dimension::temperature},
    {"uK", 1e-6, Dimension::temperature},
    {"J", 1.0, Dimension::energy},
}};

inline std::optional<UnitSymbol> find_unit(std::string_view symbol) {
  for (const auto& u : kUnitTable) {
    if (u.symbol == symbol) return u;
  }
  return std::nullopt;
}

namespace detail {

inline std::string_view skip_space(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  return s;
}

inline std::string_view trim(std::string_view s) {
  s = skip_space(s);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace detail

/// Shortest decimal text that reads back to exactly `v`.
inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buf.data(), end);
}

/// Parse quantity text such as "198 us" or "2pi x 215 MHz" into base SI.
inline UnitValue parse_quantity(std::string_view text) {
  const std::string_view whole = detail::trim(text);
  std::string_view rest = whole;
  if (rest.empty()) throw ParseError("empty quantity");

  bool angular = false;
  if (rest.starts_with("2pi")) {
    std::string_view after = detail::skip_space(rest.substr(3));
    if (after.empty() || after.front() != 'x') {
      throw ParseError("expected 'x' after '2pi' in " + detail::quoted(whole));
    }
    angular = true;
    rest = detail::skip_space(after.substr(1));
  }

  double number = 0.0;
  const char* first = rest.data();
  const char* last = rest.data() + rest.size();
  auto [ptr, ec] = std::from_chars(first, last, number);
  if (ec != std::errc{}) {
    std::string_view token = rest.substr(0, rest.find(' '));
    throw ParseError("expected a number, got " + detail::quoted(token) +
                     " in " + detail::quoted(whole));
  }
  std::string_view number_text(first, static_cast<std::size_t>(ptr - first));
  if (!std::isfinite(number)) {
    throw ParseError("non-finite number " + detail::quoted(number_text) +
                     " in " + detail::quoted(whole));
  }
  std::string_view unit_text = detail::trim(std::string_view(ptr, static_cast<std::size_t>(last - ptr)));

  if (unit_text.empty()) {
    throw ParseError("missing unit after " + detail::quoted(number_text) +
                     " in " + detail::quoted(whole));
  }
  auto unit = find_unit(unit_text);
  if (!unit) {
    throw ParseError("unknown unit " + detail::quoted(unit_text) + " in " +
                     detail::quoted(whole));
  }
  if (angular) {
    if (unit->dimension != Dimension::frequency) {
      throw ParseError("'2pi x' prefix needs a frequency unit, got " +
                       detail::quoted(unit_text) + " in " + detail::quoted(whole));
    }
    return UnitValue::rad_per_s(constants::two_pi * number * unit->scale);
  }
  return UnitValue(number * unit->scale, unit->dimension);
}

/// Write `v` in the unit `symbol`. Angular frequencies are written with the
/// "2pi x" prefix in front of a frequency unit, so that parse_quantity reads
/// the text back to the same value.
inline std::string format_quantity(const UnitValue& v, std::string_view symbol) {
  auto unit = find_unit(symbol);
  if (!unit) throw ParseError("unknown unit " + detail::quoted(symbol));
  if (v.dimension() == Dimension::angular_frequency) {
    if (unit->dimension != Dimension::frequency) {
      throw DimensionError("angular frequency must be written in a frequency unit, got " +
                           detail::quoted(symbol));
    }
    return "2pi x " +
           format_number(v.magnitude() / (constants::two_pi * unit->scale)) +
           " " + std::string(symbol);
  }
  v.require(unit->dimension, "format_quantity");
  return format_number(v.magnitude() / unit->scale) + " " + std::string(symbol);
}

/// Base-SI text form; dimensionless values are written as a bare number.
inline std::string format_quantity(const UnitValue& v) {
  if (v.dimension() == Dimension::dimensionless) return format_number(v.magnitude());
  return format_quantity(v, base_symbol(v.dimension()));
}

/// Like format_quantity, rounded to `precision` significant digits for
/// display. The result is not guaranteed to read back exactly.
inline std::string display_quantity(const UnitValue& v, std::string_view symbol, int precision = 4) {
  std::array<char, 64> buf{};
  if (symbol.empty()) {
    v.require(Dimension::dimensionless, "display_quantity");
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v.magnitude(),
                                   std::chars_format::general, precision);
    (void)ec;
    return std::string(buf.data(), end);
  }
  auto unit = find_unit(symbol);
  if (!unit) throw ParseError("unknown unit " + detail::quoted(symbol));
  double scaled = 0.0;
  std::string prefix;
  if (v.dimension() == Dimension::angular_frequency && unit->dimension == Dimension::frequency) {
    scaled = v.magnitude() / (constants::two_pi * unit->scale);
    prefix = "2pi x ";
  } else {
    v.require(unit->dimension, "display_quantity");
    scaled = v.magnitude() / unit->scale;
  }
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), scaled, std::chars_format::general,
                                 precision);
  (void)ec;
  return prefix + std::string(buf.data(), end) + " " + std::string(symbol);
}

/// Console-friendly rendering of a duration ("273.2 us", "20.02 ms").
inline std::string format_duration(const UnitValue& t, int precision = 4) {
  const double s = t.in(Dimension::time, "duration");
  const double a = std::abs(s);
  const char* unit = "s";
  double scaled = s;
  if (a != 0.0 && a < 1e-6) {
    unit = "ns";
    scaled = s * 1e9;
  } else if (a != 0.0 && a < 1e-3) {
    unit = "us";
    scaled = s * 1e6;
  } else if (a != 0.0 && a < 1.0) {
    unit = "ms";
    scaled = s * 1e3;
  }
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), scaled,
                                 std::chars_format::general, precision);
  (void)ec;
  return std::string(buf.data(), end) + " " + unit;
}

}  // namespace nacost
