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
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "nacost/catalog.hpp"
#include "nacost/error.hpp"
#include "nacost/units.hpp"

namespace nacost::rydberg {

/// One Forster channel between a pair of Rydberg states.
///
/// The dipolar strength is stored as the fitted product C3 * sqrt(D) / h in
/// MHz um^3, i.e. with the angular factor already folded in; the defect is
/// delta / h in MHz and may have either sign.
struct ForsterChannel {
  double c3_sqrtD_over_h = 0.0;  // MHz um^3
  double defect_over_h = 0.0;    // MHz
  UnitValue lifetime;            // s
  std::string label;

  ForsterChannel(double c3_sqrtD, double defect, UnitValue tau, std::string label_ = {})
      : c3_sqrtD_over_h(c3_sqrtD), defect_over_h(defect), lifetime(tau), label(std::move(label_)) {
    if (!(c3_sqrtD_over_h > 0.0) || !std::isfinite(c3_sqrtD_over_h)) {
      throw DomainError("channel constant C3*sqrt(D)/h must be > 0");
    }
    if (!std::isfinite(defect_over_h)) throw DomainError("Forster defect must be finite");
    require_positive(lifetime, Dimension::time, "Rydberg lifetime");
  }

  /// Resonant dipolar coupling C3 sqrt(D) / (h R^3) in MHz at separation R.
  double dipolar_coupling_mhz(const UnitValue& R) const {
    const double r_m = R.in(Dimension::length, "separation R");
    if (!(r_m > 0.0)) throw DomainError("separation R must be > 0");
    const double r_um = r_m * 1e6;
    return c3_sqrtD_over_h / (r_um * r_um * r_um);
  }
};

/// Dipole-dipole constant C3 / h in Hz um^3 from fine-structure reduced matrix
/// elements (in units of e a0) of the two transitions.
inline double forster_c3(double reduced_elem_a, double reduced_elem_b, double j_alpha,
                         double j_beta) {
  auto check_half_integer = [](double j, const char* what) {
    const double twice = 2.0 * j;
    if (!(j > 0.0) || std::fabs(twice - std::round(twice)) > 1e-12 ||
        static_cast<long long>(std::round(twice)) % 2 == 0) {
      throw DomainError(std::string(what) + " must be a positive half-integer");
    }
  };
  check_half_integer(j_alpha, "j_alpha");
  check_half_integer(j_beta, "j_beta");
  if (!std::isfinite(reduced_elem_a) || !std::isfinite(reduced_elem_b)) {
    throw DomainError("reduced matrix elements must be finite");
  }
  using namespace constants;
  const double e2a02 = elementary_charge * elementary_charge * bohr_radius * bohr_radius;
  // e^2 a0^2 / (4 pi eps0 h), converted from Hz m^3 to Hz um^3.
  const double k = e2a02 / (4.0 * std::numbers::pi * vacuum_permittivity * planck) * 1e18;
  return k * reduced_elem_a * reduced_elem_b /
         (std::sqrt(2.0 * j_alpha + 1.0) * std::sqrt(2.0 * j_beta + 1.0));
}

/// Signed pair interaction V/hbar at separation R.
///
/// Eigenvalue of the two-state pair Hamiltonian [[0, V3], [V3, delta]] on the
/// branch adiabatically connected to the unshifted initial pair. Resonant
/// (delta = 0) channels give exactly -V3; off resonance the result crosses
/// over to the van der Waals form -V3^2 / delta at large R.
inline UnitValue interaction(const ForsterChannel& channel, const UnitValue& R) {
  const double v3 = channel.dipolar_coupling_mhz(R);
  const double delta = channel.defect_over_h;
  double v_mhz = -v3;
  if (delta != 0.0) {
    // (delta - s*sqrt(delta^2 + 4 v3^2)) / 2 rewritten without cancellation.
    const double s = delta > 0.0 ? 1.0 : -1.0;
    v_mhz = -2.0 * v3 * v3 / (delta + s * std::sqrt(delta * delta + 4.0 * v3 * v3));
  }
  return UnitValue::rad_per_s(constants::two_pi * v_mhz * 1e6);
}

/// Lower bound 2 / (|V| tau_R) on the infidelity of a Rydberg-blockade gate.
inline double min_gate_error(const UnitValue& V, const UnitValue& lifetime) {
  const double v = std::fabs(V.in(Dimension::angular_frequency, "interaction V"));
  require_positive(lifetime, Dimension::time, "Rydberg lifetime");
  if (v == 0.0) throw DomainError("interaction V is zero: no entanglement possible");
  return 2.0 / (v * lifetime.magnitude());
}

inline double protocol_error(const ProtocolEntry& protocol, const UnitValue& V,
                             const UnitValue& lifetime) {
  return protocol.overhead_ratio * min_gate_error(V, lifetime);
}

/// Single-atom and double Rydberg populations sampled during a gate pulse.
class PopulationTrace {
 public:
  PopulationTrace(std::vector<double> times_s, std::vector<double> p1, std::vector<double> p2,
                  std::vector<double> p12)
      : t_(std::move(times_s)), p1_(std::move(p1)), p2_(std::move(p2)), p12_(std::move(p12)) {
    if (t_.empty()) throw DomainError("population trace is empty");
    if (p1_.size() != t_.size() || p2_.size() != t_.size() || p12_.size() != t_.size()) {
      throw DomainError("population trace columns differ in length");
    }
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (!std::isfinite(t_[i])) throw DomainError("non-finite time in trace");
      if (i > 0 && !(t_[i] > t_[i - 1])) {
        throw DomainError("trace times must be strictly ascending (row " + std::to_string(i) + ")");
      }
      for (double p : {p1_[i], p2_[i], p12_[i]}) {
        if (!(p >= 0.0 && p <= 1.0)) {
          throw DomainError("population outside [0,1] at row " + std::to_string(i));
        }
      }
      if (p1_[i] + p12_[i] > 1.0 || p2_[i] + p12_[i] > 1.0) {
        throw DomainError("single plus double population exceeds 1 at row " + std::to_string(i));
      }
    }
  }

  std::size_t size() const { return t_.size(); }
  const std::vector<double>& times() const { return t_; }
  const std::vector<double>& p1() const { return p1_; }
  const std::vector<double>& p2() const { return p2_; }
  const std::vector<double>& p12() const { return p12_; }

  /// Read CSV with header `t_s,p1,p2,p12`.
  static PopulationTrace from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("trace CSV: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t_s,p1,p2,p12") {
      throw ParseError("trace CSV: expected header 't_s,p1,p2,p12', got '" + line + "'");
    }
    std::vector<double> t, a, b, c;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::istringstream row(line);
      std::string cell;
      double vals[4];
      for (int k = 0; k < 4; ++k) {
        if (!std::getline(row, cell, ',')) {
          throw ParseError("trace CSV line " + std::to_string(lineno) + ": expected 4 columns");
        }
        try {
          std::size_t used = 0;
          vals[k] = std::stod(cell, &used);
          if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
          throw ParseError("trace CSV line " + std::to_string(lineno) + ": bad number '" + cell + "'");
        }
      }
      if (std::getline(row, cell, ',')) {
        throw ParseError("trace CSV line " + std::to_string(lineno) + ": too many columns");
      }
      t.push_back(vals[0]);
      a.push_back(vals[1]);
      b.push_back(vals[2]);
      c.push_back(vals[3]);
    }
    return PopulationTrace(std::move(t), std::move(a), std::move(b), std::move(c));
  }

 private:
  std::vector<double> t_, p1_, p2_, p12_;
};

/// Integrated Rydberg population: trapezoid integral of p1 + p2 + 2 p12.
inline UnitValue integrated_population(const PopulationTrace& trace) {
  const auto& t = trace.times();
  auto weight = [&](std::size_t i) { return trace.p1()[i] + trace.p2()[i] + 2.0 * trace.p12()[i]; };
  double sum = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    sum += 0.5 * (t[i] - t[i - 1]) * (weight(i - 1) + weight(i));
  }
  return UnitValue::seconds(sum);
}

struct BoundCheck {
  bool satisfied = false;
  double margin = 0.0;  // P_R |V| / 2
  UnitValue integrated;
  UnitValue required;
};

/// Relative slack when comparing the margin with 1, so that a trace sitting
/// exactly on the bound is not rejected by rounding.
inline constexpr double kBoundTolerance = 1e-12;

/// Checks the entanglement requirement P_R >= 2 / |V|. The bound assumes the
/// pair starts in a separable pure state; mixed-state traces are not detected.
inline BoundCheck entanglement_bound_check(const PopulationTrace& trace, const UnitValue& V) {
  const double v = std::fabs(V.in(Dimension::angular_frequency, "interaction V"));
  if (v == 0.0) throw DomainError("interaction V is zero: no entanglement possible");
  BoundCheck out;
  out.integrated = integrated_population(trace);
  out.required = UnitValue::seconds(2.0 / v);
  out.margin = out.integrated.magnitude() * v / 2.0;
  out.satisfied = out.margin >= 1.0 - kBoundTolerance;
  return out;
}

/// Interaction when `n_bus` atoms are placed evenly between a pair at
/// distance R. With one bus atom this is the nearest-segment interaction
/// V(R/2), an upper bound on the effective coupling; in the van der Waals
/// limit it is 64 times the direct interaction.
///
/// The channel must be in the van der Waals regime (|V3| < |delta| / 10) at
/// the shortest interacting separation R / (n_bus + 1).
inline UnitValue mediated_interaction(const ForsterChannel& channel, const UnitValue& R,
                                      int n_bus) {
  if (n_bus < 0 || n_bus > 1) {
    throw ConfigError("mediated_interaction supports n_bus of 0 or 1, got " +
                      std::to_string(n_bus));
  }
  const UnitValue segment = R / static_cast<double>(n_bus + 1);
  const double v3 = channel.dipolar_coupling_mhz(segment);
  if (!(v3 < std::fabs(channel.defect_over_h) / 10.0)) {
    throw DomainError(
        "bus-mediated scaling needs the van der Waals regime: |C3 sqrt(D)/R^3| = " +
        std::to_string(v3) + " MHz must be below |delta|/10 = " +
        std::to_string(std::fabs(channel.defect_over_h) / 10.0) + " MHz at the segment length");
  }
  return interaction(channel, segment);
}

}  // namespace nacost::rydberg
