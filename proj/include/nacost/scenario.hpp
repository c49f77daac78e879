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

// Scenario files: TOML with one table per model area. Dimensional values are
// quantity strings ("198 us", "2pi x 100 kHz"); dimensionless values are TOML
// numbers. Every key is optional; omitted keys take the built-in defaults
// (the Cs, d = 10 reference architecture) and are listed in the artifact footer.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <toml.hpp>

#include "nacost/catalog.hpp"
#include "nacost/connectivity.hpp"
#include "nacost/error.hpp"
#include "nacost/quantity.hpp"
#include "nacost/report.hpp"
#include "nacost/rydberg.hpp"
#include "nacost/surface_code.hpp"
#include "nacost/transport.hpp"
#include "nacost/units.hpp"

namespace nacost {

struct Scenario {
  // [atom] / [species]
  std::string species = "Cs";
  std::optional<UnitValue> mass;
  SpeciesOverrides user_species;
  // [trap]
  UnitValue omega0 = two_pi_times_hz(100e3);
  // [channel]
  double c3_sqrtD_over_h = 44000.0;  // MHz um^3
  UnitValue defect = UnitValue::hertz(0.0);
  UnitValue lifetime = UnitValue::seconds(198e-6);
  std::string channel_label = "Cs 99s1/2 + 100s1/2 <-> 98p1/2 + 100p1/2 (D = 16/9)";
  // [gates]
  UnitValue t_cz = UnitValue::seconds(0.46e-6);
  UnitValue t_beam = UnitValue::seconds(0.5e-6);
  UnitValue t_meas = UnitValue::seconds(1e-3);
  std::string protocol = "time-optimal";
  // [bound]
  std::optional<UnitValue> bound_interaction;
  std::optional<UnitValue> bound_separation;
  // [layout]
  UnitValue r_g = UnitValue::meters(1.4e-6);
  std::optional<UnitValue> r;
  double blockade_ratio = 20.0;
  double pulse_area = 7.6;
  double eta_max = 0.01;
  UnitValue max_range = UnitValue::meters(14e-6);
  int parallel_factor = 1;
  // [code]
  std::optional<int> d;
  std::optional<double> target_inverse_pl;
  double p = 0.0008;
  surface_code::SurfaceCodeModel model;
  std::int64_t logical_count = 100;
  // [grid]
  int width = 10;
  int height = 10;
  std::optional<connectivity::ZonePosition> zone;
  connectivity::Routing routing = connectivity::Routing::pairwise;
  // [transport]
  double round_trip_budget = 0.1;
  // [readout]
  std::optional<UnitValue> readout_t_meas;
  int repetition_size = 5;
  UnitValue encode_time = UnitValue::seconds(5e-6);

  std::vector<std::string> defaults_applied;

  // Model inputs assembled from the fields above.

  SpeciesParams species_params() const {
    SpeciesParams sp = species_lookup(species, user_species);
    if (mass) sp = SpeciesParams(species, *mass, "scenario atom.mass");
    return sp;
  }

  rydberg::ForsterChannel channel() const {
    return rydberg::ForsterChannel(c3_sqrtD_over_h, defect.in(Dimension::frequency, "channel.defect") * 1e-6,
                                   lifetime, channel_label);
  }

  transport::TransportSpec transport_spec() const {
    return transport::TransportSpec(species_params(), omega0, round_trip_budget);
  }

  connectivity::GateTimings timings() const { return {t_cz, t_beam, t_meas}; }

  connectivity::LayoutParams layout() const {
    connectivity::LayoutParams base(r_g, r_g, blockade_ratio, pulse_area, eta_max);
    return connectivity::LayoutParams(r_g, r ? *r : connectivity::min_pair_pitch(base), blockade_ratio,
                                      pulse_area, eta_max);
  }

  int code_distance() const {
    if (d) return *d;
    if (target_inverse_pl) return surface_code::min_distance_for_target(model, p, *target_inverse_pl);
    return 10;
  }

  connectivity::LogicalGrid grid() const {
    return connectivity::LogicalGrid(width, height,
                                     zone ? *zone : connectivity::LogicalGrid::edge_zone(width));
  }

  connectivity::ConnectivityScenario connectivity() const {
    return connectivity::ConnectivityScenario{code_distance(), timings(),          layout(),
                                              transport_spec(), round_trip_budget, grid(),
                                              routing,          parallel_factor,   max_range};
  }

  surface_code::ReadoutModel readout() const {
    return surface_code::ReadoutModel(readout_t_meas ? *readout_t_meas : t_meas, repetition_size, encode_time);
  }

  /// Interaction used by the fidelity-floor report: the explicit
  /// bound.interaction, else the channel evaluated at bound.separation
  /// (default d * r_g, the long-range gate distance).
  UnitValue reference_interaction() const {
    if (bound_interaction) return *bound_interaction;
    return rydberg::interaction(channel(), reference_separation());
  }

  UnitValue reference_separation() const {
    if (bound_separation) return *bound_separation;
    return static_cast<double>(code_distance()) * r_g;
  }

  /// Stable text of every resolved value; the scenario hash is taken over it.
  std::string canonical() const {
    std::ostringstream o;
    auto q = [&](std::string_view k, const UnitValue& v) { o << k << '=' << format_quantity(v) << '\n'; };
    auto n = [&](std::string_view k, double v) { o << k << '=' << format_number(v) << '\n'; };
    auto s = [&](std::string_view k, std::string_view v) { o << k << '=' << v << '\n'; };
    s("atom.species", species);
    if (mass) q("atom.mass", *mass);
    for (const auto& [name, m] : user_species) q("species." + name, m);
    q("trap.omega0", omega0);
    n("channel.c3_sqrtD_over_h", c3_sqrtD_over_h);
    q("channel.defect", defect);
    q("channel.lifetime", lifetime);
    s("channel.label", channel_label);
    q("gates.t_cz", t_cz);
    q("gates.t_beam", t_beam);
    q("gates.t_meas", t_meas);
    s("gates.protocol", protocol);
    if (bound_interaction) q("bound.interaction", *bound_interaction);
    if (bound_separation) q("bound.separation", *bound_separation);
    q("layout.r_g", r_g);
    if (r) q("layout.r", *r);
    n("layout.blockade_ratio", blockade_ratio);
    n("layout.pulse_area", pulse_area);
    n("layout.eta_max", eta_max);
    q("layout.max_range", max_range);
    n("layout.parallel_factor", parallel_factor);
    if (d) n("code.d", *d);
    if (target_inverse_pl) n("code.target_inverse_pl", *target_inverse_pl);
    n("code.p", p);
    n("code.prefactor", model.prefactor);
    n("code.slope", model.slope);
    n("code.offset", model.offset);
    n("code.threshold", model.threshold);
    n("code.logical_count", static_cast<double>(logical_count));
    n("grid.width", width);
    n("grid.height", height);
    if (zone) {
      n("grid.zone_x", zone->x);
      n("grid.zone_y", zone->y);
    }
    s("grid.routing", connectivity::routing_name(routing));
    n("transport.round_trip_budget", round_trip_budget);
    if (readout_t_meas) q("readout.t_meas", *readout_t_meas);
    n("readout.repetition_size", repetition_size);
    q("readout.encode_time", encode_time);
    return o.str();
  }

  std::string hash() const { return report::fnv1a_hex(canonical()); }

  report::Provenance provenance() const { return {hash(), defaults_applied}; }
};

namespace detail {

inline const std::map<std::string, std::set<std::string>, std::less<>>& scenario_keys() {
  static const std::map<std::string, std::set<std::string>, std::less<>> keys{
      {"atom", {"species", "mass"}},
      {"species", {}},  // free-form: name = "mass"
      {"trap", {"omega0"}},
      {"channel", {"c3_sqrtD_over_h", "defect", "lifetime", "label"}},
      {"gates", {"t_cz", "t_beam", "t_meas", "protocol"}},
      {"bound", {"interaction", "separation"}},
      {"layout", {"r_g", "r", "blockade_ratio", "pulse_area", "eta_max", "max_range", "parallel_factor"}},
      {"code", {"d", "target_inverse_pl", "p", "prefactor", "slope", "offset", "threshold", "logical_count"}},
      {"grid", {"width", "height", "zone_x", "zone_y", "routing"}},
      {"transport", {"round_trip_budget"}},
      {"readout", {"t_meas", "repetition_size", "encode_time"}},
  };
  return keys;
}

class ScenarioReader {
 public:
  ScenarioReader(const toml::table& root, std::string source, std::vector<std::string>& defaults)
      : root_(root), source_(std::move(source)), defaults_(defaults) {}

  std::string where(const toml::node* node, std::string_view section, std::string_view key) const {
    std::string loc = source_;
    if (node && node->source().begin.line > 0) {
      loc += ":" + std::to_string(node->source().begin.line);
    } else if (node) {
      loc += " (override)";
    }
    return loc + ": " + std::string(section) + "." + std::string(key);
  }

  void check_known() const {
    const auto& keys = scenario_keys();
    for (const auto& [sec_key, sec_node] : root_) {
      const std::string_view sec = sec_key.str();
      auto it = keys.find(sec);
      if (it == keys.end()) {
        throw ConfigError(source_ + ":" + std::to_string(sec_node.source().begin.line) + ": unknown section [" +
                          std::string(sec) + "]");
      }
      const auto* tbl = sec_node.as_table();
      if (!tbl) throw ConfigError(source_ + ": '" + std::string(sec) + "' must be a table");
      if (sec == "species") continue;
      for (const auto& [k, v] : *tbl) {
        if (!it->second.count(std::string(k.str()))) {
          throw ConfigError(where(&v, sec, k.str()) + ": unknown key");
        }
      }
    }
  }

  const toml::node* find(std::string_view section, std::string_view key) const {
    const auto* sec = root_.get_as<toml::table>(section);
    return sec ? sec->get(key) : nullptr;
  }

  const toml::table* section(std::string_view name) const { return root_.get_as<toml::table>(name); }

  std::optional<UnitValue> quantity(std::string_view section, std::string_view key, Dimension dim) {
    const toml::node* node = find(section, key);
    if (!node) return std::nullopt;
    const auto* str = node->as_string();
    if (!str) throw ConfigError(where(node, section, key) + ": expected a quantity string such as \"1.5 us\"");
    UnitValue v;
    try {
      v = parse_quantity(str->get());
    } catch (const ParseError& e) {
      throw ParseError(where(node, section, key) + ": " + e.what());
    }
    if (v.dimension() != dim) {
      throw DimensionError(where(node, section, key) + ": expected " + std::string(dimension_name(dim)) +
                           ", got " + std::string(dimension_name(v.dimension())));
    }
    return v;
  }

  template <typename T>
  std::optional<T> number(std::string_view section, std::string_view key) {
    const toml::node* node = find(section, key);
    if (!node) return std::nullopt;
    if constexpr (std::is_integral_v<T>) {
      if (!node->is_integer()) throw ConfigError(where(node, section, key) + ": expected an integer");
      return static_cast<T>(node->as_integer()->get());
    } else {
      if (!node->is_number()) throw ConfigError(where(node, section, key) + ": expected a number");
      return node->value<double>();
    }
  }

  std::optional<std::string> text(std::string_view section, std::string_view key) {
    const toml::node* node = find(section, key);
    if (!node) return std::nullopt;
    if (!node->is_string()) throw ConfigError(where(node, section, key) + ": expected a string");
    return node->as_string()->get();
  }

  // Assign-or-record-default helpers.
  void get(std::string_view s, std::string_view k, Dimension dim, UnitValue& field) {
    if (auto v = quantity(s, k, dim)) field = *v;
    else note(s, k);
  }
  // Optional fields have no default value of their own; resolve_scenario
  // records what stands in for them.
  void get(std::string_view s, std::string_view k, Dimension dim, std::optional<UnitValue>& field) {
    if (auto v = quantity(s, k, dim)) field = *v;
  }
  template <typename T>
  void get(std::string_view s, std::string_view k, T& field) {
    if constexpr (std::is_same_v<T, std::string>) {
      if (auto v = text(s, k)) field = *v;
      else note(s, k);
    } else {
      if (auto v = number<T>(s, k)) field = *v;
      else note(s, k);
    }
  }
  template <typename T>
  void get(std::string_view s, std::string_view k, std::optional<T>& field) {
    if (auto v = number<T>(s, k)) field = *v;
  }

  void note(std::string_view s, std::string_view k) { defaults_.push_back(std::string(s) + "." + std::string(k)); }

  const std::string& source() const { return source_; }

 private:
  const toml::table& root_;
  std::string source_;
  std::vector<std::string>& defaults_;
};

/// Typed TOML node for a `--set` override value: integer, float, boolean,
/// else string.
inline void assign_override_value(toml::table& section, const std::string& key, const std::string& value) {
  std::int64_t iv = 0;
  auto [ip, iec] = std::from_chars(value.data(), value.data() + value.size(), iv);
  if (iec == std::errc{} && ip == value.data() + value.size()) {
    section.insert_or_assign(key, iv);
    return;
  }
  double dv = 0.0;
  auto [dp, dec] = std::from_chars(value.data(), value.data() + value.size(), dv);
  if (dec == std::errc{} && dp == value.data() + value.size()) {
    section.insert_or_assign(key, dv);
    return;
  }
  if (value == "true" || value == "false") {
    section.insert_or_assign(key, value == "true");
    return;
  }
  section.insert_or_assign(key, value);
}

}  // namespace detail

/// Apply dotted `section.key=value` overrides to a parsed scenario table.
inline void apply_overrides(toml::table& root, const std::vector<std::string>& overrides) {
  for (const auto& ov : overrides) {
    const auto eq = ov.find('=');
    const auto dot = ov.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq || dot == 0 || dot + 1 == eq) {
      throw ConfigError("override '" + ov + "' must look like section.key=value");
    }
    const std::string sec = ov.substr(0, dot);
    const std::string key = ov.substr(dot + 1, eq - dot - 1);
    const std::string val = std::string(detail::trim(std::string_view(ov).substr(eq + 1)));
    if (!root.contains(sec)) root.insert(sec, toml::table{});
    auto* tbl = root.get_as<toml::table>(sec);
    if (!tbl) throw ConfigError("override '" + ov + "': '" + sec + "' is not a table");
    detail::assign_override_value(*tbl, key, val);
  }
}

/// Resolve a parsed TOML table into a validated Scenario.
inline Scenario resolve_scenario(const toml::table& root, const std::string& source) {
  Scenario s;
  detail::ScenarioReader in(root, source, s.defaults_applied);
  in.check_known();

  if (const auto* species = in.section("species")) {
    for (const auto& [k, v] : *species) {
      (void)v;
      const std::string name(k.str());
      s.user_species.emplace(name, *in.quantity("species", name, Dimension::mass));
    }
  }
  in.get("atom", "species", s.species);
  in.get("atom", "mass", Dimension::mass, s.mass);
  in.get("trap", "omega0", Dimension::angular_frequency, s.omega0);
  in.get("channel", "c3_sqrtD_over_h", s.c3_sqrtD_over_h);
  in.get("channel", "defect", Dimension::frequency, s.defect);
  in.get("channel", "lifetime", Dimension::time, s.lifetime);
  in.get("channel", "label", s.channel_label);
  in.get("gates", "t_cz", Dimension::time, s.t_cz);
  in.get("gates", "t_beam", Dimension::time, s.t_beam);
  in.get("gates", "t_meas", Dimension::time, s.t_meas);
  in.get("gates", "protocol", s.protocol);
  in.get("bound", "interaction", Dimension::angular_frequency, s.bound_interaction);
  in.get("bound", "separation", Dimension::length, s.bound_separation);
  in.get("layout", "r_g", Dimension::length, s.r_g);
  in.get("layout", "r", Dimension::length, s.r);
  in.get("layout", "blockade_ratio", s.blockade_ratio);
  in.get("layout", "pulse_area", s.pulse_area);
  in.get("layout", "eta_max", s.eta_max);
  in.get("layout", "max_range", Dimension::length, s.max_range);
  in.get("layout", "parallel_factor", s.parallel_factor);
  in.get("code", "d", s.d);
  in.get("code", "target_inverse_pl", s.target_inverse_pl);
  in.get("code", "p", s.p);
  in.get("code", "prefactor", s.model.prefactor);
  in.get("code", "slope", s.model.slope);
  in.get("code", "offset", s.model.offset);
  in.get("code", "threshold", s.model.threshold);
  in.get("code", "logical_count", s.logical_count);
  in.get("grid", "width", s.width);
  in.get("grid", "height", s.height);
  std::optional<double> zx, zy;
  in.get("grid", "zone_x", zx);
  in.get("grid", "zone_y", zy);
  if (zx.has_value() != zy.has_value()) {
    throw ConfigError(source + ": grid.zone_x and grid.zone_y must be given together");
  }
  if (zx) s.zone = connectivity::ZonePosition{*zx, *zy};
  std::string routing = "pairwise";
  in.get("grid", "routing", routing);
  if (routing == "pairwise") s.routing = connectivity::Routing::pairwise;
  else if (routing == "zone") s.routing = connectivity::Routing::zone;
  else throw ConfigError(in.where(in.find("grid", "routing"), "grid", "routing") + ": expected 'pairwise' or 'zone'");
  in.get("transport", "round_trip_budget", s.round_trip_budget);
  in.get("readout", "t_meas", Dimension::time, s.readout_t_meas);
  in.get("readout", "repetition_size", s.repetition_size);
  in.get("readout", "encode_time", Dimension::time, s.encode_time);

  if (!s.r) in.note("layout", "r (crosstalk bound)");
  if (!s.d && !s.target_inverse_pl) in.note("code", "d");
  if (!s.zone) in.note("grid", "zone (edge midpoint)");
  if (!s.bound_interaction && !s.bound_separation) in.note("bound", "separation (d * r_g)");
  if (!s.readout_t_meas) in.note("readout", "t_meas (gates.t_meas)");

  if (s.d && s.target_inverse_pl) {
    throw ConfigError(source + ": give either code.d or code.target_inverse_pl, not both");
  }

  // Validate by building every model input once.
  auto ctx = [&](std::string_view what, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      throw ConfigError(source + ": " + std::string(what) + ": " + e.what());
    }
  };
  ctx("atom", [&] { (void)s.species_params(); });
  ctx("channel", [&] { (void)s.channel(); });
  ctx("transport", [&] { (void)s.transport_spec(); });
  ctx("gates", [&] { (void)s.timings(); (void)protocol_lookup(s.protocol); });
  ctx("layout", [&] { (void)s.layout(); });
  ctx("code", [&] {
    s.model.validate();
    if (!(s.p > 0.0 && s.p < 1.0)) throw DomainError("p must lie in (0,1)");
    (void)surface_code::CodeInstance(s.code_distance(), s.logical_count);
  });
  ctx("grid", [&] { (void)s.grid(); });
  ctx("readout", [&] { (void)s.readout(); });
  if (s.parallel_factor < 1) throw ConfigError(source + ": layout.parallel_factor must be >= 1");
  return s;
}

inline toml::table parse_scenario_table(std::string_view text, const std::string& source) {
  try {
    return toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    throw ParseError(source + ":" + std::to_string(e.source().begin.line) + ": " + std::string(e.description()));
  }
}

inline Scenario load_scenario_text(std::string_view text, const std::string& source,
                                   const std::vector<std::string>& overrides = {}) {
  toml::table root = parse_scenario_table(text, source);
  apply_overrides(root, overrides);
  return resolve_scenario(root, source);
}

inline Scenario load_scenario(const std::filesystem::path& path, const std::vector<std::string>& overrides = {}) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open scenario file '" + path.string() + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return load_scenario_text(buf.str(), path.string(), overrides);
}

}  // namespace nacost
