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

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nacost/error.hpp"
#include "nacost/units.hpp"

namespace nacost {

struct SpeciesParams {
  std::string name;
  UnitValue mass;  // kg
  std::string provenance;

  SpeciesParams(std::string name_, UnitValue mass_, std::string provenance_ = {})
      : name(std::move(name_)), mass(mass_), provenance(std::move(provenance_)) {
    require_positive(mass, Dimension::mass, "species mass");
  }
};

/// A Rydberg gate protocol, characterised by how far its error sits above the
/// blockade/lifetime floor (the factor epsilon / epsilon_min).
struct ProtocolEntry {
  std::string name;
  double overhead_ratio;
  std::string provenance;

  ProtocolEntry(std::string name_, double ratio, std::string provenance_ = {})
      : name(std::move(name_)), overhead_ratio(ratio), provenance(std::move(provenance_)) {
    if (!(overhead_ratio >= 1.0)) {
      throw DomainError("protocol '" + name + "': overhead ratio must be >= 1");
    }
  }
};

namespace detail {

struct SpeciesRow {
  std::string_view name;
  double mass_u;
};

// Standard atomic weights in unified atomic mass units.
inline constexpr std::array<SpeciesRow, 4> kSpecies{{
    {"Rb", 86.909},
    {"Cs", 132.905},
    {"Sr", 87.906},
    {"Yb", 170.936},
}};

struct ProtocolRow {
  std::string_view name;
  double ratio;
  std::string_view provenance;
};

inline constexpr std::array<ProtocolRow, 4> kProtocols{{
    {"dark-state", 19.0, "two-atom dark state gate, strong blockade (Petrosyan et al. 2017)"},
    {"time-optimal", 15.0, "time-optimal gate, strong blockade (Jandura & Pupillo 2022)"},
    {"weak-blockade", 2.1, "modified time-optimal profile, weak blockade (Poole et al. 2025)"},
    {"weak-blockade-with-recoil", 3.0,
     "weak blockade including interaction dephasing and photon recoil (Poole et al. 2025)"},
}};

template <typename Rows>
std::string known_names(const Rows& rows) {
  std::string out;
  for (const auto& r : rows) {
    if (!out.empty()) out += ", ";
    out += r.name;
  }
  return out;
}

}  // namespace detail

/// Species masses defined by a scenario, keyed by name. Consulted before the
/// built-in table.
using SpeciesOverrides = std::map<std::string, UnitValue, std::less<>>;

inline SpeciesParams species_lookup(std::string_view name,
                                    const SpeciesOverrides& user = {}) {
  if (auto it = user.find(name); it != user.end()) {
    return SpeciesParams(std::string(name), it->second, "user-defined mass");
  }
  for (const auto& row : detail::kSpecies) {
    if (row.name == name) {
      return SpeciesParams(std::string(name),
                           UnitValue::kilograms(row.mass_u * constants::atomic_mass_unit),
                           "standard atomic weight " + std::to_string(row.mass_u) + " u");
    }
  }
  std::string known = detail::known_names(detail::kSpecies);
  for (const auto& [n, m] : user) known += ", " + n;
  throw LookupError("unknown species '" + std::string(name) + "'; known: " + known);
}

inline ProtocolEntry protocol_lookup(std::string_view name) {
  for (const auto& row : detail::kProtocols) {
    if (row.name == name) {
      return ProtocolEntry(std::string(row.name), row.ratio, std::string(row.provenance));
    }
  }
  throw LookupError("unknown protocol '" + std::string(name) +
                    "'; known: " + detail::known_names(detail::kProtocols));
}

inline std::vector<ProtocolEntry> all_protocols() {
  std::vector<ProtocolEntry> out;
  for (const auto& row : detail::kProtocols) {
    out.emplace_back(std::string(row.name), row.ratio, std::string(row.provenance));
  }
  return out;
}

}  // namespace nacost
