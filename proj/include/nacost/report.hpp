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

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nacost/connectivity.hpp"
#include "nacost/error.hpp"
#include "nacost/nisq.hpp"
#include "nacost/quantity.hpp"

namespace nacost::report {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Reproducibility footer carried by every artifact.
struct Provenance {
  std::string scenario_hash;
  std::vector<std::string> defaults_applied;
};

inline std::string csv_number(double v) { return format_number(v); }

inline void append_csv_footer(std::string& csv, const Provenance& prov) {
  csv += "# scenario_hash=" + prov.scenario_hash + "\n";
  csv += "# defaults_applied=";
  for (std::size_t i = 0; i < prov.defaults_applied.size(); ++i) {
    if (i) csv += ";";
    csv += prov.defaults_applied[i];
  }
  csv += "\n";
}

inline Json provenance_json(const Provenance& prov) {
  Json j;
  j["scenario_hash"] = prov.scenario_hash;
  j["defaults_applied"] = prov.defaults_applied;
  return j;
}

inline Json to_json(const connectivity::StrategyReport& r) {
  Json j;
  j["strategy"] = std::string(connectivity::strategy_name(r.strategy));
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["neighbor_time_s"] = r.neighbor_time.magnitude();
  j["array_average_time_s"] = r.array_average_time.magnitude();
  Json phases = Json::array();
  for (const auto& p : r.breakdown) {
    Json ph;
    ph["phase"] = p.name;
    ph["kind"] = std::string(connectivity::phase_kind_name(p.kind));
    ph["duration_s"] = p.duration.magnitude();
    ph["scales_with_distance"] = p.scales_with_distance;
    phases.push_back(std::move(ph));
  }
  j["breakdown"] = std::move(phases);
  j["assumptions"] = r.assumptions;
  return j;
}

inline Json strategies_json(const std::vector<connectivity::StrategyReport>& reports, const Provenance& prov) {
  Json doc;
  doc["command"] = "connectivity";
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  doc["strategies"] = std::move(arr);
  doc["provenance"] = provenance_json(prov);
  return doc;
}

inline std::string strategies_csv(const std::vector<connectivity::StrategyReport>& reports, const Provenance& prov) {
  std::string out = "strategy,neighbor_time_s,array_average_time_s,error\n";
  for (const auto& r : reports) {
    out += std::string(connectivity::strategy_name(r.strategy)) + ",";
    if (r.error) {
      std::string msg = *r.error;
      for (char& c : msg) {
        if (c == '"') c = '\'';
      }
      out += ",,\"" + msg + "\"\n";
    } else {
      out += csv_number(r.neighbor_time.magnitude()) + "," + csv_number(r.array_average_time.magnitude()) + ",\n";
    }
  }
  append_csv_footer(out, prov);
  return out;
}

inline std::string cost_grid_csv(const std::vector<nisq::CostCell>& cells, const Provenance& prov) {
  std::string out = "n,epsilon,loglog_cost\n";
  for (const auto& c : cells) {
    out += std::to_string(c.n) + "," + csv_number(c.epsilon) + "," + csv_number(c.loglog_cost) + "\n";
  }
  append_csv_footer(out, prov);
  return out;
}

/// Writes `content` to a temporary sibling and renames it over `path`, so a
/// reader never observes a partially written artifact.
inline void atomic_write(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + tmp.string() + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::filesystem::remove(tmp);
      throw Error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move artifact into place at '" + path.string() + "': " + ec.message());
  }
}

}  // namespace nacost::report
