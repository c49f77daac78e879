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
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nacost/error.hpp"
#include "nacost/quantity.hpp"
#include "nacost/transport.hpp"
#include "nacost/units.hpp"

namespace nacost::connectivity {

struct GateTimings {
  UnitValue t_cz;    // physical Rydberg CZ
  UnitValue t_beam;  // re-pointing the addressing beams
  UnitValue t_meas;  // one syndrome measurement round

  GateTimings(UnitValue cz, UnitValue beam, UnitValue meas) : t_cz(cz), t_beam(beam), t_meas(meas) {
    for (auto [v, what] : {std::pair{t_cz, "t_cz"}, {t_beam, "t_beam"}, {t_meas, "t_meas"}}) {
      if (v.in(Dimension::time, what) < 0.0) throw DomainError(std::string(what) + " must be >= 0");
    }
  }
};

/// Geometry and gate parameters entering the crosstalk bound.
///
/// `pulse_area` is the dimensionless Omega * t_CZ of the time-optimal gate and
/// `blockade_ratio` is (V/hbar) / Omega. Neighbouring gate pairs shift each
/// other by (V/hbar) (r_g / r)^6.
struct LayoutParams {
  UnitValue gate_pair_spacing;  // r_g
  UnitValue array_pitch;        // r
  double blockade_ratio = 20.0;
  double pulse_area = 7.6;
  double eta_max = 0.01;

  LayoutParams(UnitValue r_g, UnitValue r, double ratio = 20.0, double area = 7.6,
               double eta = 0.01)
      : gate_pair_spacing(r_g), array_pitch(r), blockade_ratio(ratio), pulse_area(area), eta_max(eta) {
    require_positive(gate_pair_spacing, Dimension::length, "gate pair spacing r_g");
    require_positive(array_pitch, Dimension::length, "array pitch r");
    for (auto [v, what] : {std::pair{blockade_ratio, "blockade_ratio"},
                           {pulse_area, "pulse_area"}, {eta_max, "eta_max"}}) {
      if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be > 0");
    }
    if (array_pitch < gate_pair_spacing) {
      throw DomainError("array pitch r must be >= gate pair spacing r_g");
    }
  }
};

/// Worst-case crosstalk phase eta = 4 (V/hbar)(r_g/r)^6 t_CZ / (2 pi).
inline double crosstalk_eta(const LayoutParams& layout) {
  const double q = layout.gate_pair_spacing / layout.array_pitch;
  const double q3 = q * q * q;
  return 4.0 * layout.blockade_ratio * layout.pulse_area * q3 * q3 / constants::two_pi;
}

/// Smallest pitch r for which crosstalk_eta stays at eta_max (not rounded).
inline UnitValue min_pair_pitch(const LayoutParams& layout) {
  const double ratio = std::pow(
      4.0 * layout.blockade_ratio * layout.pulse_area / (constants::two_pi * layout.eta_max), 1.0 / 6.0);
  return layout.gate_pair_spacing * ratio;
}

// ---------------------------------------------------------------------------
// Strategy reports

enum class Strategy {
  long_range,
  transport,
  lattice_surgery_in_place,
  lattice_surgery_transport,
};

constexpr std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::long_range: return "long-range";
    case Strategy::transport: return "transport";
    case Strategy::lattice_surgery_in_place: return "lattice-surgery-in-place";
    case Strategy::lattice_surgery_transport: return "lattice-surgery-transport";
  }
  return "?";
}

enum class PhaseKind { gate, beam, move, measurement };

constexpr std::string_view phase_kind_name(PhaseKind k) {
  switch (k) {
    case PhaseKind::gate: return "gate";
    case PhaseKind::beam: return "beam";
    case PhaseKind::move: return "move";
    case PhaseKind::measurement: return "measurement";
  }
  return "?";
}

struct Phase {
  std::string name;
  PhaseKind kind;
  UnitValue duration;
  bool scales_with_distance = false;  // inter-patch moves only
};

struct StrategyReport {
  Strategy strategy;
  UnitValue neighbor_time = UnitValue::seconds(0.0);
  UnitValue array_average_time = UnitValue::seconds(0.0);
  std::vector<Phase> breakdown;
  std::vector<std::string> assumptions;
  std::optional<std::string> error;

  explicit StrategyReport(Strategy s) : strategy(s) {}

  void add(std::string name, PhaseKind kind, UnitValue duration, bool scaled = false) {
    breakdown.push_back(Phase{std::move(name), kind, duration, scaled});
    neighbor_time = sum_breakdown();
    array_average_time = neighbor_time;
  }

  UnitValue sum_breakdown() const {
    UnitValue total = UnitValue::seconds(0.0);
    for (const auto& p : breakdown) total += p.duration;
    return total;
  }
};

namespace detail {
inline void check_distance(int d) {
  if (d < 3) throw DomainError("code distance must be >= 3");
}
inline std::string um(const UnitValue& length) { return display_quantity(length, "um", 6); }
inline std::string approx(double v) { return display_quantity(UnitValue::scalar(v), "", 6); }
}  // namespace detail

/// Transversal logical CZ from d^2 physical gates, sequenced in
/// ceil(d^2 / parallel_factor) rounds of (t_CZ + t_beam).
inline UnitValue longrange_transversal_time(int d, const GateTimings& timings, int parallel_factor = 1) {
  detail::check_distance(d);
  if (parallel_factor < 1) throw DomainError("parallel factor must be >= 1");
  const std::int64_t gates = static_cast<std::int64_t>(d) * d;
  const std::int64_t rounds = (gates + parallel_factor - 1) / parallel_factor;
  return static_cast<double>(rounds) * (timings.t_cz + timings.t_beam);
}

/// Long-range strategy report. The pair separation is d * r_g; beyond
/// `max_range` a warning is recorded rather than an error raised.
inline StrategyReport longrange_report(int d, const GateTimings& timings, const LayoutParams& layout,
                                       int parallel_factor, const UnitValue& max_range) {
  detail::check_distance(d);
  if (parallel_factor < 1) throw DomainError("parallel factor must be >= 1");
  const std::int64_t gates = static_cast<std::int64_t>(d) * d;
  const double rounds = static_cast<double>((gates + parallel_factor - 1) / parallel_factor);
  StrategyReport rep(Strategy::long_range);
  rep.add("rydberg-gates", PhaseKind::gate, rounds * timings.t_cz);
  rep.add("beam-pointing", PhaseKind::beam, rounds * timings.t_beam);
  rep.assumptions.push_back("transversal CZ as " + std::to_string(static_cast<long long>(rounds)) +
                            " rounds of (t_cz + t_beam), parallel factor " +
                            std::to_string(parallel_factor));
  const UnitValue reach = static_cast<double>(d) * layout.gate_pair_spacing;
  if (reach.magnitude() > max_range.in(Dimension::length, "max interaction range") * (1.0 + 1e-9)) {
    rep.assumptions.push_back("WARNING: required interaction distance d*r_g = " + detail::um(reach) +
                              " exceeds the maximum interaction range " + detail::um(max_range));
  } else {
    rep.assumptions.push_back("required interaction distance d*r_g = " + detail::um(reach) +
                              " within maximum range " + detail::um(max_range));
  }
  rep.assumptions.push_back("distance-independent: array average equals the neighbour time");
  return rep;
}

/// Transport-based transversal CZ between neighbouring patches: move the data
/// block by R = d * r, pulse, move back. The round-trip heating budget is split
/// evenly over the two moves.
inline StrategyReport transport_transversal_time(int d, const LayoutParams& layout,
                                                 const transport::TransportSpec& spec,
                                                 const GateTimings& timings, double round_trip_budget) {
  detail::check_distance(d);
  const UnitValue distance = static_cast<double>(d) * layout.array_pitch;
  const UnitValue move = transport::minimal_jerk_time(spec, distance, round_trip_budget / 2.0);
  StrategyReport rep(Strategy::transport);
  rep.add("move-out", PhaseKind::move, move, true);
  rep.add("rydberg-pulse", PhaseKind::gate, timings.t_cz);
  rep.add("move-back", PhaseKind::move, move, true);
  rep.assumptions.push_back("move distance R = d*r = " + detail::um(distance) + ", minimal-jerk profile");
  rep.assumptions.push_back("round-trip heating budget " + format_number(round_trip_budget) +
                            " quanta split evenly over 2 moves");
  rep.assumptions.push_back("all d^2 gate pairs pulsed in one global step");
  rep.assumptions.push_back("motional heating assumed to accumulate linearly across moves");
  const UnitValue bound = min_pair_pitch(layout);
  if (layout.array_pitch.magnitude() < bound.magnitude() * (1.0 - 1e-12)) {
    rep.assumptions.push_back("WARNING: array pitch " + detail::um(layout.array_pitch) +
                              " is below the crosstalk bound " + detail::um(bound) +
                              " (eta = " + detail::approx(crosstalk_eta(layout)) + ")");
  }
  return rep;
}

enum class SurgeryMode { in_place, transport };

/// Kinematic inputs for lattice surgery performed by moving atoms.
struct SurgeryTransport {
  transport::TransportSpec spec;
  UnitValue move_distance;  // one lattice period r
  double budget;            // for the whole sequence, split over 4 moves
};

/// Lattice-surgery CNOT: a merge and a split, each d gates and d measurement
/// rounds.
///   in place:  2d (t_CZ + t_beam + t_meas)
///   transport: 2 t_CZ + 4 t_move + 2d t_meas
inline StrategyReport lattice_surgery_time(int d, const GateTimings& timings, SurgeryMode mode,
                                           const std::optional<SurgeryTransport>& kin = std::nullopt) {
  detail::check_distance(d);
  const double dd = static_cast<double>(d);
  if (mode == SurgeryMode::in_place) {
    StrategyReport rep(Strategy::lattice_surgery_in_place);
    for (const char* step : {"merge", "split"}) {
      rep.add(std::string(step) + "-gates", PhaseKind::gate, dd * timings.t_cz);
      rep.add(std::string(step) + "-beam-pointing", PhaseKind::beam, dd * timings.t_beam);
      rep.add(std::string(step) + "-measurement-rounds", PhaseKind::measurement, dd * timings.t_meas);
    }
    rep.assumptions.push_back("in-place surgery with scanned addressing beams, 2d gates and 2d measurement rounds");
    rep.assumptions.push_back("Hadamards converting CZ to CNOT neglected");
    rep.assumptions.push_back("distance-independent: array average equals the neighbour time");
    return rep;
  }
  if (!kin) {
    throw ConfigError("transport-mode lattice surgery needs a transport spec, move distance and heating budget");
  }
  const UnitValue move = transport::minimal_jerk_time(kin->spec, kin->move_distance, kin->budget / 4.0);
  StrategyReport rep(Strategy::lattice_surgery_transport);
  for (const char* step : {"merge", "split"}) {
    rep.add(std::string(step) + "-move-in", PhaseKind::move, move);
    rep.add(std::string(step) + "-global-gate", PhaseKind::gate, timings.t_cz);
    rep.add(std::string(step) + "-move-out", PhaseKind::move, move);
    rep.add(std::string(step) + "-measurement-rounds", PhaseKind::measurement, dd * timings.t_meas);
  }
  rep.assumptions.push_back("move distance one lattice period " + detail::um(kin->move_distance) +
                            ", sequence heating budget " + format_number(kin->budget) +
                            " split evenly over 4 moves");
  rep.assumptions.push_back("motional heating assumed to accumulate linearly across moves");
  rep.assumptions.push_back("distance-independent: array average equals the neighbour time");
  return rep;
}

// ---------------------------------------------------------------------------
// Routing statistics over a grid of logical patches

struct ZonePosition {
  double x;
  double y;
};

/// Logical patches on integer sites (0..width-1, 0..height-1), in units of
/// the logical pitch. The optional zone may sit off the grid.
struct LogicalGrid {
  int width = 1;
  int height = 1;
  std::optional<ZonePosition> zone;

  LogicalGrid(int w, int h, std::optional<ZonePosition> z = std::nullopt) : width(w), height(h), zone(z) {
    if (width < 1 || height < 1) throw DomainError("grid dimensions must be positive");
  }

  std::int64_t sites() const { return static_cast<std::int64_t>(width) * height; }

  /// Just outside the middle of the bottom edge.
  static ZonePosition edge_zone(int w) { return {(w - 1) / 2.0, -1.0}; }
};

namespace detail {
/// Ordered pairs along one axis of length n with separation k:
/// n for k = 0, 2(n - k) otherwise.
inline std::vector<double> separation_counts(int n) {
  std::vector<double> c(static_cast<std::size_t>(n));
  c[0] = n;
  for (int k = 1; k < n; ++k) c[static_cast<std::size_t>(k)] = 2.0 * (n - k);
  return c;
}
}  // namespace detail

/// Mean of D^exponent over ordered pairs of distinct sites, D the Manhattan
/// distance. Exact, via the per-axis separation histograms.
inline double manhattan_stats(const LogicalGrid& grid, double exponent) {
  if (grid.sites() < 2) throw DomainError("pair statistics need at least two grid sites");
  const auto cx = detail::separation_counts(grid.width);
  const auto cy = detail::separation_counts(grid.height);
  double sum = 0.0;
  for (int kx = 0; kx < grid.width; ++kx) {
    for (int ky = 0; ky < grid.height; ++ky) {
      if (kx == 0 && ky == 0) continue;
      sum += cx[static_cast<std::size_t>(kx)] * cy[static_cast<std::size_t>(ky)] *
             std::pow(static_cast<double>(kx + ky), exponent);
    }
  }
  const double n = static_cast<double>(grid.sites());
  return sum / (n * (n - 1.0));
}

/// Mean over sites of (Manhattan distance to the entangling zone)^exponent.
inline double zone_stats(const LogicalGrid& grid, double exponent) {
  if (!grid.zone) throw ConfigError("zone routing needs a zone position on the grid");
  const auto [zx, zy] = *grid.zone;
  double sum = 0.0;
  for (int x = 0; x < grid.width; ++x) {
    for (int y = 0; y < grid.height; ++y) {
      sum += std::pow(std::fabs(x - zx) + std::fabs(y - zy), exponent);
    }
  }
  return sum / static_cast<double>(grid.sites());
}

enum class Routing { pairwise, zone };

constexpr std::string_view routing_name(Routing r) {
  return r == Routing::pairwise ? "pairwise" : "zone";
}

/// Minimal-jerk moves scale as R^(1/3).
inline constexpr double kMoveDistanceExponent = 1.0 / 3.0;

/// Array-averaged logical gate time. Distance-scaled move phases are
/// multiplied by the mean of D^(1/3) for the routing; other phases are kept.
inline UnitValue average_logical_gate_time(const StrategyReport& neighbor, const LogicalGrid& grid,
                                           Routing routing) {
  const bool scales = std::any_of(neighbor.breakdown.begin(), neighbor.breakdown.end(),
                                  [](const Phase& p) { return p.scales_with_distance; });
  if (routing == Routing::zone && !grid.zone) {
    throw ConfigError("zone routing needs a zone position on the grid");
  }
  if (!scales) return neighbor.neighbor_time;
  const double factor = routing == Routing::pairwise ? manhattan_stats(grid, kMoveDistanceExponent)
                                                     : zone_stats(grid, kMoveDistanceExponent);
  UnitValue total = UnitValue::seconds(0.0);
  for (const auto& p : neighbor.breakdown) {
    total += p.scales_with_distance ? p.duration * factor : p.duration;
  }
  return total;
}

/// Fills report.array_average_time and notes how it was obtained.
inline void apply_array_average(StrategyReport& report, const LogicalGrid& grid, Routing routing) {
  report.array_average_time = average_logical_gate_time(report, grid, routing);
  const bool scales = std::any_of(report.breakdown.begin(), report.breakdown.end(),
                                  [](const Phase& p) { return p.scales_with_distance; });
  if (!scales) return;
  std::string note = "array average over " + std::to_string(grid.width) + "x" +
                     std::to_string(grid.height) + " grid, " + std::string(routing_name(routing)) +
                     " routing: move phases scaled by mean D^(1/3) = ";
  if (routing == Routing::pairwise) {
    note += detail::approx(manhattan_stats(grid, kMoveDistanceExponent)) + " (distinct site pairs)";
  } else {
    note += detail::approx(zone_stats(grid, kMoveDistanceExponent)) + " (per-site distance to zone at (" +
            format_number(grid.zone->x) + ", " + format_number(grid.zone->y) + "))";
  }
  report.assumptions.push_back(std::move(note));
}

/// Everything compare_strategies needs.
struct ConnectivityScenario {
  int distance;
  GateTimings timings;
  LayoutParams layout;
  transport::TransportSpec transport_spec;
  double round_trip_budget;
  LogicalGrid grid;
  Routing routing = Routing::pairwise;
  int parallel_factor = 1;
  UnitValue max_range = UnitValue::meters(14e-6);
};

/// One report per strategy, sorted by array-averaged time. A failing model
/// marks only its own report; errored reports sort last.
inline std::vector<StrategyReport> compare_strategies(const ConnectivityScenario& s) {
  std::vector<StrategyReport> out;
  auto attempt = [&](Strategy which, auto&& build) {
    try {
      StrategyReport rep = build();
      apply_array_average(rep, s.grid, s.routing);
      out.push_back(std::move(rep));
    } catch (const Error& e) {
      StrategyReport rep(which);
      rep.error = e.what();
      out.push_back(std::move(rep));
    }
  };
  attempt(Strategy::long_range,
          [&] { return longrange_report(s.distance, s.timings, s.layout, s.parallel_factor, s.max_range); });
  attempt(Strategy::transport, [&] {
    auto rep = transport_transversal_time(s.distance, s.layout, s.transport_spec, s.timings, s.round_trip_budget);
    rep.assumptions.push_back("pulse-area condition read as dimensionless Omega*t_cz >= " +
                              format_number(s.layout.pulse_area) +
                              "; the hbar in 'Omega t_CZ/hbar >= 7.6' treated as a typo");
    return rep;
  });
  attempt(Strategy::lattice_surgery_in_place,
          [&] { return lattice_surgery_time(s.distance, s.timings, SurgeryMode::in_place); });
  attempt(Strategy::lattice_surgery_transport, [&] {
    return lattice_surgery_time(s.distance, s.timings, SurgeryMode::transport,
                                SurgeryTransport{s.transport_spec, s.layout.array_pitch, s.round_trip_budget});
  });
  std::stable_sort(out.begin(), out.end(), [](const StrategyReport& a, const StrategyReport& b) {
    if (a.error.has_value() != b.error.has_value()) return !a.error.has_value();
    if (a.error) return false;
    return a.array_average_time.magnitude() < b.array_average_time.magnitude();
  });
  return out;
}

}  // namespace nacost::connectivity
