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

// Subcommand dispatch for the nacost tool. All artifacts of a run are built
// in memory first and written only after every model evaluation succeeded,
// each through a temporary file and a rename.
//
// Exit status: 0 success, 1 model/domain/config error, 2 usage error.

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "nacost/catalog.hpp"
#include "nacost/connectivity.hpp"
#include "nacost/nisq.hpp"
#include "nacost/quantity.hpp"
#include "nacost/report.hpp"
#include "nacost/rydberg.hpp"
#include "nacost/scenario.hpp"
#include "nacost/surface_code.hpp"
#include "nacost/transport.hpp"

namespace nacost::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitModelError = 1;
inline constexpr int kExitUsage = 2;

struct Artifact {
  std::filesystem::path path;
  std::string content;
};

/// Numeric table emitted as CSV (with provenance footer) or JSON rows.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string csv(const report::Provenance& prov) const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + report::csv_number(row[i]);
      out += "\n";
    }
    report::append_csv_footer(out, prov);
    return out;
  }

  report::Json json() const {
    report::Json j;
    j["columns"] = columns;
    j["rows"] = rows;
    return j;
  }
};

struct Options {
  std::string scenario_path;
  std::string json_path;
  std::string csv_path;
  std::vector<std::string> overrides;
  // bound
  std::string interaction;
  std::string separation;
  std::string trace_path;
  // transport
  std::vector<std::string> distances;
  std::vector<double> heating;
  // code
  double target = 0.0;
  // grids and figures
  std::string figure;
  std::string n_range = "10:1000";
  std::string eps_range = "1e-4:1e-2";
  std::string n_spacing = "log";
  int resolution = 50;
  int d = 0;
  std::string tcz_range = "0.1us:1us";
  std::string tbeam_range = "0.1us:2us";
  std::string budget_range = "0.01:1";
  std::string r_range;
  std::string inset_csv;
};

namespace detail {

struct Outcome {
  std::string console;
  std::vector<Artifact> artifacts;
};

inline std::pair<std::string, std::string> split_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos) {
    throw ConfigError(std::string(flag) + " expects LO:HI, got '" + text + "'");
  }
  return {text.substr(0, colon), text.substr(colon + 1)};
}

inline double parse_number(const std::string& s, const char* flag) {
  double v = 0.0;
  const auto t = nacost::detail::trim(s);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size()) {
    throw ConfigError(std::string(flag) + ": '" + s + "' is not a number");
  }
  return v;
}

inline std::pair<double, double> number_range(const std::string& text, const char* flag) {
  auto [lo, hi] = split_range(text, flag);
  const double a = parse_number(lo, flag), b = parse_number(hi, flag);
  if (!(b > a)) throw ConfigError(std::string(flag) + ": range must have LO < HI");
  return {a, b};
}

inline std::pair<double, double> quantity_range(const std::string& text, Dimension dim, const char* flag) {
  auto [lo, hi] = split_range(text, flag);
  const double a = parse_quantity(lo).in(dim, flag), b = parse_quantity(hi).in(dim, flag);
  if (!(b > a)) throw ConfigError(std::string(flag) + ": range must have LO < HI");
  return {a, b};
}

inline std::vector<double> spaced(double lo, double hi, int n, bool logarithmic) {
  if (n < 2) throw ConfigError("--resolution must be >= 2");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    v[static_cast<std::size_t>(i)] =
        logarithmic ? std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * f) : lo + (hi - lo) * f;
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

inline std::string footer(const report::Provenance& prov) {
  std::string out = "scenario hash " + prov.scenario_hash + "; defaults applied: ";
  if (prov.defaults_applied.empty()) return out + "none\n";
  out += std::to_string(prov.defaults_applied.size()) + " (";
  for (std::size_t i = 0; i < prov.defaults_applied.size(); ++i) {
    out += (i ? ", " : "") + prov.defaults_applied[i];
  }
  return out + ")\n";
}

inline std::string sci(double v, int precision = 4) {
  std::ostringstream o;
  o << std::setprecision(precision) << v;
  return o.str();
}

/// Writes either to the requested file or, for grid-type output, to stdout.
inline void emit(Outcome& res, const Options& opt, const std::string& csv, const report::Json& json,
                 bool csv_to_console) {
  if (!opt.csv_path.empty()) res.artifacts.push_back({opt.csv_path, csv});
  if (!opt.json_path.empty()) res.artifacts.push_back({opt.json_path, json.dump(2) + "\n"});
  if (csv_to_console && opt.csv_path.empty() && opt.json_path.empty()) res.console += csv;
}

// ---------------------------------------------------------------------------

inline Outcome cmd_bound(const Scenario& s, const Options& opt) {
  const auto channel = s.channel();
  UnitValue V;
  std::string source;
  if (!opt.interaction.empty()) {
    V = parse_quantity(opt.interaction).require(Dimension::angular_frequency, "--V");
    source = "--V";
  } else if (!opt.separation.empty()) {
    const UnitValue R = parse_quantity(opt.separation).require(Dimension::length, "--R");
    V = rydberg::interaction(channel, R);
    source = "channel at R = " + format_quantity(R, "um");
  } else if (s.bound_interaction) {
    V = *s.bound_interaction;
    source = "bound.interaction";
  } else {
    V = s.reference_interaction();
    source = "channel at R = " + format_quantity(s.reference_separation(), "um");
  }
  const double eps_min = rydberg::min_gate_error(V, s.lifetime);
  const auto selected = protocol_lookup(s.protocol);
  const auto prov = s.provenance();

  std::ostringstream con;
  con << "interaction V = " << display_quantity(V, "MHz") << " (" << source << ")\n";
  con << "Rydberg lifetime = " << display_quantity(s.lifetime, "us") << "\n";
  con << "fidelity floor eps_min = 2/(V tau) = " << sci(eps_min) << "\n";
  Table table{{"overhead_ratio", "gate_error"}, {}};
  report::Json protocols = report::Json::array();
  con << "protocol                     eps/eps_min   gate error\n";
  for (const auto& p : all_protocols()) {
    const double err = rydberg::protocol_error(p, V, s.lifetime);
    con << (p.name == selected.name ? "* " : "  ") << std::left << std::setw(27) << p.name << std::setw(14)
        << p.overhead_ratio << sci(err) << "\n";
    table.rows.push_back({p.overhead_ratio, err});
    report::Json pj;
    pj["name"] = p.name;
    pj["overhead_ratio"] = p.overhead_ratio;
    pj["gate_error"] = err;
    pj["provenance"] = p.provenance;
    protocols.push_back(std::move(pj));
  }
  report::Json j;
  j["command"] = "bound";
  j["interaction_rad_s"] = V.magnitude();
  j["interaction_source"] = source;
  j["lifetime_s"] = s.lifetime.magnitude();
  j["min_gate_error"] = eps_min;
  j["selected_protocol"] = selected.name;
  j["protocols"] = std::move(protocols);
  if (!opt.trace_path.empty()) {
    std::ifstream f(opt.trace_path);
    if (!f) throw ConfigError("cannot open trace '" + opt.trace_path + "'");
    const auto trace = rydberg::PopulationTrace::from_csv(f);
    const auto check = rydberg::entanglement_bound_check(trace, V);
    con << "trace " << opt.trace_path << ": P_R = " << display_quantity(check.integrated, "us")
        << ", required 2/|V| = " << display_quantity(check.required, "us") << ", margin " << sci(check.margin)
        << (check.satisfied ? " (bound satisfied)" : " (bound VIOLATED)") << "\n";
    report::Json tj;
    tj["path"] = opt.trace_path;
    tj["integrated_population_s"] = check.integrated.magnitude();
    tj["required_s"] = check.required.magnitude();
    tj["margin"] = check.margin;
    tj["satisfied"] = check.satisfied;
    j["trace"] = std::move(tj);
  }
  j["notes"] = {"the entanglement bound assumes the pair starts in a separable pure state",
                "protocol errors are overhead_ratio * eps_min"};
  j["provenance"] = report::provenance_json(prov);
  con << "note: the entanglement bound assumes a separable pure initial state\n";
  con << footer(prov);

  std::string csv = "protocol,overhead_ratio,gate_error\n";
  {
    const auto ps = all_protocols();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      csv += ps[i].name + "," + report::csv_number(table.rows[i][0]) + "," + report::csv_number(table.rows[i][1]) + "\n";
    }
    report::append_csv_footer(csv, prov);
  }
  Outcome res{con.str(), {}};
  emit(res, opt, csv, j, false);
  return res;
}

inline Outcome cmd_transport(const Scenario& s, const Options& opt) {
  const auto spec = s.transport_spec();
  const auto layout = s.layout();
  const int d = s.code_distance();
  std::vector<UnitValue> distances;
  for (const auto& text : opt.distances) distances.push_back(parse_quantity(text).require(Dimension::length, "--R"));
  if (distances.empty()) distances = {layout.array_pitch, static_cast<double>(d) * layout.array_pitch};
  std::vector<double> budgets = opt.heating;
  if (budgets.empty()) budgets = {s.round_trip_budget / 4.0, s.round_trip_budget / 2.0, s.round_trip_budget};
  const auto prov = s.provenance();

  std::ostringstream con;
  con << "species " << spec.species.name << ", mass " << display_quantity(spec.species.mass, "u", 6) << "\n";
  con << "trap omega0 = " << display_quantity(spec.trap_frequency, "kHz") << ", x_ho = "
      << display_quantity(transport::harmonic_length(spec), "nm") << "\n";
  con << "minimal-jerk move times:\n";
  Table moves{{"R_m", "delta_n", "t_mj_s"}, {}};
  for (const auto& R : distances) {
    for (double dn : budgets) {
      const auto t = transport::minimal_jerk_time(spec, R, dn);
      con << "  R = " << std::left << std::setw(12) << display_quantity(R, "um") << " dn = " << std::setw(8) << dn
          << " t = " << format_duration(t) << "\n";
      moves.rows.push_back({R.magnitude(), dn, t.magnitude()});
    }
  }
  Table inset{{"mean_n", "temperature_K"}, {}};
  con << "temperature vs mean occupation:\n";
  for (double n : {0.01, 0.03, 0.1, 0.3, 1.0, 3.0, 10.0}) {
    const auto T = transport::temperature_from_quanta(n, spec.trap_frequency);
    inset.rows.push_back({n, T.magnitude()});
    con << "  <n> = " << std::setw(6) << n << " T = " << display_quantity(T, "uK") << "\n";
  }
  con << "note: heating is assumed to add linearly across moves\n";
  con << footer(prov);
  report::Json j;
  j["command"] = "transport";
  j["species"] = spec.species.name;
  j["mass_kg"] = spec.species.mass.magnitude();
  j["omega0_rad_s"] = spec.trap_frequency.magnitude();
  j["harmonic_length_m"] = transport::harmonic_length(spec).magnitude();
  j["moves"] = moves.json();
  j["temperature"] = inset.json();
  j["provenance"] = report::provenance_json(prov);
  Outcome res{con.str(), {}};
  emit(res, opt, moves.csv(prov), j, false);
  return res;
}

inline Outcome cmd_code(const Scenario& s, const Options& opt) {
  const int d = s.code_distance();
  const double pl = surface_code::logical_error_rate(s.model, s.p, d);
  const double target = opt.target > 0.0 ? opt.target : s.target_inverse_pl.value_or(1e6);
  const int d_min = surface_code::min_distance_for_target(s.model, s.p, target);
  const auto qubits = surface_code::physical_qubit_count(surface_code::CodeInstance(d, s.logical_count));
  const auto readout = s.readout();
  const auto t_read = surface_code::repetition_readout_time(readout);
  const auto prov = s.provenance();

  std::ostringstream con;
  con << "p = " << s.p << ", p_th = " << s.model.threshold << ", d = " << d << "\n";
  con << "logical error rate p_L = " << sci(std::min(pl, 1.0)) << " (1/p_L = " << sci(1.0 / pl) << ")"
      << (pl > 1.0 ? " [clamped to 1]" : "") << "\n";
  con << "physical qubits for " << s.logical_count << " logicals: " << qubits << "\n";
  con << "smallest d reaching 1/p_L >= " << sci(target) << ": " << d_min << "\n";
  con << "repetition-code readout (N = " << readout.repetition_size
      << "): " << format_duration(t_read) << " (optimistic 1/N bound)\n";
  con << footer(prov);

  Table sweep{{"d", "logical_error_rate", "inverse_logical_error_rate", "physical_qubits"}, {}};
  for (int dd = 3; dd <= std::max({d, d_min, 25}); ++dd) {
    const double r = surface_code::logical_error_rate(s.model, s.p, dd);
    sweep.rows.push_back({static_cast<double>(dd), r, 1.0 / r,
                          static_cast<double>(surface_code::physical_qubit_count(
                              surface_code::CodeInstance(dd, s.logical_count)))});
  }
  report::Json j;
  j["command"] = "code";
  j["p"] = s.p;
  j["d"] = d;
  j["logical_error_rate"] = pl;
  j["inverse_logical_error_rate"] = 1.0 / pl;
  j["logical_count"] = s.logical_count;
  j["physical_qubits"] = qubits;
  j["target_inverse_pl"] = target;
  j["min_distance_for_target"] = d_min;
  report::Json rj;
  rj["single_atom_measure_time_s"] = readout.single_atom_measure_time.magnitude();
  rj["repetition_size"] = readout.repetition_size;
  rj["encode_time_s"] = readout.encode_time.magnitude();
  rj["readout_time_s"] = t_read.magnitude();
  rj["note"] = "optimistic bound: integration time reduced exactly N-fold";
  j["readout"] = std::move(rj);
  j["distance_sweep"] = sweep.json();
  j["provenance"] = report::provenance_json(prov);
  Outcome res{con.str(), {}};
  emit(res, opt, sweep.csv(prov), j, false);
  return res;
}

inline Outcome cmd_connectivity(const Scenario& s, const Options& opt) {
  const auto reports = connectivity::compare_strategies(s.connectivity());
  const auto prov = s.provenance();
  std::ostringstream con;
  con << "logical CZ strategies (d = " << s.code_distance() << ", " << s.width << "x" << s.height << " grid, "
      << connectivity::routing_name(s.routing) << " routing)\n";
  for (const auto& r : reports) {
    con << "  " << std::left << std::setw(28) << connectivity::strategy_name(r.strategy);
    if (r.error) {
      con << "error: " << *r.error << "\n";
      continue;
    }
    con << "neighbour " << std::setw(12) << format_duration(r.neighbor_time) << " array average "
        << format_duration(r.array_average_time) << "\n";
    for (const auto& a : r.assumptions) con << "      - " << a << "\n";
  }
  con << footer(prov);
  Outcome res{con.str(), {}};
  emit(res, opt, report::strategies_csv(reports, prov), report::strategies_json(reports, prov), false);
  return res;
}

inline nisq::GridSpec grid_spec(const Options& opt) {
  const auto [n_lo, n_hi] = number_range(opt.n_range, "--n-range");
  const auto [e_lo, e_hi] = number_range(opt.eps_range, "--eps-range");
  nisq::Spacing spacing;
  if (opt.n_spacing == "log") spacing = nisq::Spacing::logarithmic;
  else if (opt.n_spacing == "linear") spacing = nisq::Spacing::linear;
  else throw ConfigError("--n-spacing must be 'log' or 'linear'");
  return nisq::GridSpec{n_lo, n_hi, e_lo, e_hi, opt.resolution, opt.resolution, spacing};
}

inline Outcome cmd_nisq_grid(const Scenario& s, const Options& opt) {
  const auto cells = nisq::cost_grid(grid_spec(opt));
  const auto prov = s.provenance();
  report::Json j;
  j["command"] = "nisq-grid";
  j["columns"] = {"n", "epsilon", "loglog_cost"};
  report::Json rows = report::Json::array();
  for (const auto& c : cells) rows.push_back({c.n, c.epsilon, c.loglog_cost});
  j["rows"] = std::move(rows);
  j["note"] = "model estimate: log10(log10 C) with C = 2^(sqrt(n)/epsilon)";
  j["provenance"] = report::provenance_json(prov);
  Outcome res;
  emit(res, opt, report::cost_grid_csv(cells, prov), j, true);
  return res;
}

inline Outcome cmd_fig5(const Scenario& s, const Options& opt) {
  const int d = opt.d > 0 ? opt.d : s.code_distance();
  const auto [cz_lo, cz_hi] = quantity_range(opt.tcz_range, Dimension::time, "--tcz-range");
  const auto [b_lo, b_hi] = quantity_range(opt.tbeam_range, Dimension::time, "--tbeam-range");
  Table t{{"t_cz_s", "t_beam_s", "t_gate_s"}, {}};
  for (double cz : spaced(cz_lo, cz_hi, opt.resolution, false)) {
    for (double beam : spaced(b_lo, b_hi, opt.resolution, false)) {
      const connectivity::GateTimings g(UnitValue::seconds(cz), UnitValue::seconds(beam), s.t_meas);
      t.rows.push_back({cz, beam, connectivity::longrange_transversal_time(d, g, s.parallel_factor).magnitude()});
    }
  }
  const auto prov = s.provenance();
  report::Json j = t.json();
  j["figure"] = "fig5";
  j["d"] = d;
  j["provenance"] = report::provenance_json(prov);
  Outcome res;
  emit(res, opt, t.csv(prov), j, true);
  return res;
}

inline Outcome cmd_fig8(const Scenario& s, const Options& opt) {
  const auto spec = s.transport_spec();
  const int d = opt.d > 0 ? opt.d : s.code_distance();
  std::pair<double, double> r_range;
  if (!opt.r_range.empty()) {
    r_range = quantity_range(opt.r_range, Dimension::length, "--R-range");
  } else {
    const double pitch = s.layout().array_pitch.magnitude();
    r_range = {pitch, 2.0 * d * pitch};
  }
  const auto [b_lo, b_hi] = number_range(opt.budget_range, "--budget-range");
  if (!(b_lo > 0.0)) throw ConfigError("--budget-range must be positive");
  Table grid{{"R_m", "round_trip_budget", "round_trip_time_s"}, {}};
  for (double R : spaced(r_range.first, r_range.second, opt.resolution, false)) {
    for (double b : spaced(b_lo, b_hi, opt.resolution, true)) {
      const auto t = transport::minimal_jerk_time(spec, UnitValue::meters(R), b / 2.0);
      grid.rows.push_back({R, b, 2.0 * t.magnitude()});
    }
  }
  Table inset{{"mean_n", "temperature_K"}, {}};
  for (double n : spaced(0.01, 10.0, opt.resolution, true)) {
    inset.rows.push_back({n, transport::temperature_from_quanta(n, spec.trap_frequency).magnitude()});
  }
  const auto prov = s.provenance();
  report::Json j = grid.json();
  j["figure"] = "fig8";
  j["note"] = "round trip: two minimal-jerk moves, each with half the round-trip heating budget";
  j["temperature_inset"] = inset.json();
  j["provenance"] = report::provenance_json(prov);
  Outcome res;
  emit(res, opt, grid.csv(prov), j, true);
  std::string inset_path = opt.inset_csv;
  if (inset_path.empty() && !opt.csv_path.empty()) {
    std::filesystem::path p(opt.csv_path);
    inset_path = (p.parent_path() / (p.stem().string() + "-inset" + p.extension().string())).string();
  }
  if (!inset_path.empty()) res.artifacts.push_back({inset_path, inset.csv(prov)});
  return res;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nacost: resource estimates for neutral-atom quantum computers", "nacost"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--scenario", opt.scenario_path, "Scenario TOML file (defaults when omitted)");
    sub->add_option("--json", opt.json_path, "Write a JSON report to this path");
    sub->add_option("--csv", opt.csv_path, "Write CSV to this path");
    sub->add_option("--set", opt.overrides, "Override a scenario value: section.key=value");
  };
  auto* bound = app.add_subcommand("bound", "Rydberg fidelity floor and protocol-adjusted gate errors");
  common(bound);
  bound->add_option("--V", opt.interaction, "Interaction strength, e.g. '2pi x 215 MHz'");
  bound->add_option("--R", opt.separation, "Evaluate the scenario channel at this separation");
  bound->add_option("--trace", opt.trace_path, "Population trace CSV (t_s,p1,p2,p12) to check against the bound");
  auto* trans = app.add_subcommand("transport", "Minimal-jerk transport tables");
  common(trans);
  trans->add_option("--R", opt.distances, "Move distance (repeatable)");
  trans->add_option("--dn", opt.heating, "Heating increment per move (repeatable)");
  auto* code = app.add_subcommand("code", "Surface-code error rates, distances and qubit counts");
  common(code);
  code->add_option("--target", opt.target, "Target 1/p_L for the distance search");
  auto* conn = app.add_subcommand("connectivity", "Compare logical CZ strategies");
  common(conn);
  auto grid_flags = [&](CLI::App* sub) {
    sub->add_option("--n-range", opt.n_range, "Qubit-count range LO:HI");
    sub->add_option("--eps-range", opt.eps_range, "Gate infidelity range LO:HI");
    sub->add_option("--n-spacing", opt.n_spacing, "log or linear spacing of n")->check(CLI::IsMember({"log", "linear"}));
  };
  auto* nisq_cmd = app.add_subcommand("nisq-grid", "Classical simulation cost grid (CSV)");
  common(nisq_cmd);
  grid_flags(nisq_cmd);
  nisq_cmd->add_option("--resolution", opt.resolution, "Points per axis");
  auto* fig = app.add_subcommand("figure", "Emit the data grid behind a figure: fig2, fig5 or fig8");
  common(fig);
  grid_flags(fig);
  fig->add_option("name", opt.figure, "fig2 | fig5 | fig8")->required()->check(CLI::IsMember({"fig2", "fig5", "fig8"}));
  fig->add_option("--resolution", opt.resolution, "Points per axis");
  fig->add_option("--d", opt.d, "Code distance (fig5, fig8)");
  fig->add_option("--tcz-range", opt.tcz_range, "fig5 t_cz range LO:HI");
  fig->add_option("--tbeam-range", opt.tbeam_range, "fig5 t_beam range LO:HI");
  fig->add_option("--budget-range", opt.budget_range, "fig8 round-trip heating range LO:HI");
  fig->add_option("--R-range", opt.r_range, "fig8 distance range LO:HI, e.g. 10um:200um");
  fig->add_option("--inset-csv", opt.inset_csv, "fig8 temperature inset CSV path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const Scenario scenario = opt.scenario_path.empty() ? load_scenario_text("", "<defaults>", opt.overrides)
                                                        : load_scenario(opt.scenario_path, opt.overrides);
    detail::Outcome res;
    if (bound->parsed()) res = detail::cmd_bound(scenario, opt);
    else if (trans->parsed()) res = detail::cmd_transport(scenario, opt);
    else if (code->parsed()) res = detail::cmd_code(scenario, opt);
    else if (conn->parsed()) res = detail::cmd_connectivity(scenario, opt);
    else if (nisq_cmd->parsed()) res = detail::cmd_nisq_grid(scenario, opt);
    else if (opt.figure == "fig2") res = detail::cmd_nisq_grid(scenario, opt);
    else if (opt.figure == "fig5") res = detail::cmd_fig5(scenario, opt);
    else res = detail::cmd_fig8(scenario, opt);
    for (const auto& a : res.artifacts) report::atomic_write(a.path, a.content);
    out << res.console;
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitModelError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitModelError;
  }
}

}  // namespace nacost::cli
