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
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "nacost/error.hpp"
#include "nacost/units.hpp"

namespace nacost::surface_code {

/// Logical error rate of the rotated surface code under depolarizing noise
/// with a matching decoder: p_L = prefactor (p / threshold)^(slope d - offset).
struct SurfaceCodeModel {
  double prefactor = 0.08;
  double slope = 0.58;
  double offset = 0.27;
  double threshold = 0.0053;

  void validate() const {
    for (double v : {prefactor, slope, offset, threshold}) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError("surface-code model coefficients must be positive");
      }
    }
    if (!(threshold < 1.0)) throw ConfigError("surface-code threshold must be < 1");
  }
};

/// k logical qubits of the [[d^2, 1, d]] rotated code.
struct CodeInstance {
  int distance = 3;
  std::int64_t logical_count = 1;

  CodeInstance(int d, std::int64_t k) : distance(d), logical_count(k) {
    if (distance < 3) throw DomainError("code distance must be >= 3");
    if (logical_count < 1) throw DomainError("logical qubit count must be >= 1");
  }
};

/// Raw (unclamped) logical error rate per logical operation.
inline double logical_error_rate(const SurfaceCodeModel& model, double p, int d) {
  model.validate();
  if (!(p > 0.0 && p < 1.0)) throw DomainError("physical error rate p must lie in (0,1)");
  if (d < 3) throw DomainError("code distance must be >= 3");
  return model.prefactor *
         std::pow(p / model.threshold, model.slope * static_cast<double>(d) - model.offset);
}

/// Smallest d >= 3 with 1 / p_L >= target.
inline int min_distance_for_target(const SurfaceCodeModel& model, double p,
                                   double target_inverse_pl) {
  model.validate();
  if (!(p > 0.0 && p < 1.0)) throw DomainError("physical error rate p must lie in (0,1)");
  if (!(p < model.threshold)) {
    throw DomainError("physical error rate is above threshold: no code distance suppresses errors");
  }
  if (!(target_inverse_pl > 0.0) || !std::isfinite(target_inverse_pl)) {
    throw DomainError("target 1/p_L must be positive and finite");
  }
  // Continuous solution of prefactor * ratio^(slope d - offset) = 1/target, then
  // walk to the exact integer boundary by evaluation.
  const double ratio_log = std::log(p / model.threshold);
  const double needed = std::log(1.0 / (target_inverse_pl * model.prefactor));
  double d_real = (needed / ratio_log + model.offset) / model.slope;
  int d = std::max(3, static_cast<int>(std::floor(d_real)) - 1);
  auto meets = [&](int dd) { return 1.0 / logical_error_rate(model, p, dd) >= target_inverse_pl; };
  while (d > 3 && meets(d - 1)) --d;
  while (!meets(d)) ++d;
  return d;
}

/// 2 d^2 - 1 physical qubits per logical (data plus non-shared ancillas).
inline std::int64_t physical_qubit_count(const CodeInstance& code) {
  const std::int64_t d = code.distance;
  return code.logical_count * (2 * d * d - 1);
}

/// Ancilla readout through an N-atom repetition code on a second species:
/// N times the photon flux, so 1/N of the integration time, plus the cost of
/// preparing the repetition state. Optimistic: real gains are close to N.
struct ReadoutModel {
  UnitValue single_atom_measure_time;
  int repetition_size = 1;
  UnitValue encode_time;

  ReadoutModel(UnitValue t_meas, int n, UnitValue t_encode)
      : single_atom_measure_time(t_meas), repetition_size(n), encode_time(t_encode) {
    require_positive(single_atom_measure_time, Dimension::time, "single-atom measurement time");
    if (repetition_size < 1) throw DomainError("repetition size N must be >= 1");
    if (encode_time.in(Dimension::time, "encode time") < 0.0) {
      throw DomainError("encode time must be >= 0");
    }
  }
};

inline UnitValue repetition_readout_time(const ReadoutModel& r) {
  return r.encode_time + r.single_atom_measure_time / static_cast<double>(r.repetition_size);
}

/// One computational-basis branch of ancilla (+) repetition register.
struct Branch {
  int ancilla_bit;
  int register_bits;  // all N register atoms share this value
  std::complex<double> amplitude;
};

/// c0 |0>|0...0>_N + c1 |1>|1...1>_N. Always exactly two branches: the map
/// entangles rather than copies the ancilla.
struct RepetitionState {
  int register_size;
  std::vector<Branch> branches;

  double norm_squared() const {
    double s = 0.0;
    for (const auto& b : branches) s += std::norm(b.amplitude);
    return s;
  }
};

inline constexpr double kNormalizationTolerance = 1e-9;

inline RepetitionState repetition_encode_state(std::complex<double> c0, std::complex<double> c1,
                                               int n) {
  if (n < 1) throw DomainError("repetition size N must be >= 1");
  const double norm = std::norm(c0) + std::norm(c1);
  if (!(std::fabs(norm - 1.0) <= kNormalizationTolerance)) {
    throw DomainError("input amplitudes are not normalized (|c0|^2 + |c1|^2 = " +
                      std::to_string(norm) + ")");
  }
  return RepetitionState{n, {Branch{0, 0, c0}, Branch{1, 1, c1}}};
}

}  // namespace nacost::surface_code
