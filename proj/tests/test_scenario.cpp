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

#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "nacost/scenario.hpp"

namespace nacost {
namespace {

const std::string kDefaults = std::string(NACOST_DATA_DIR) + "/paper-defaults.toml";

bool has(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

TEST(Scenario, DefaultsFileIsFullyExplicit) {
  const Scenario s = load_scenario(kDefaults);
  EXPECT_TRUE(s.defaults_applied.empty());
  EXPECT_EQ(s.species, "Cs");
  EXPECT_NEAR(s.omega0.magnitude(), constants::two_pi * 100e3, 1e-6);
  EXPECT_EQ(s.code_distance(), 10);
  EXPECT_EQ(s.r_g.magnitude(), 1.4e-6);
  EXPECT_EQ(s.t_cz.magnitude(), 0.46e-6);
  EXPECT_EQ(s.t_beam.magnitude(), 0.5e-6);
  EXPECT_EQ(s.t_meas.magnitude(), 1e-3);
  EXPECT_EQ(s.round_trip_budget, 0.1);
  EXPECT_EQ(s.grid().zone->x, 4.5);
}

TEST(Scenario, EmptyFileAppliesEveryDefault) {
  const Scenario s = load_scenario_text("", "empty.toml");
  for (const char* key : {"atom.species", "trap.omega0", "channel.c3_sqrtD_over_h", "channel.lifetime", "gates.t_cz",
                          "gates.t_beam", "gates.t_meas", "gates.protocol", "layout.r_g", "code.p",
                          "transport.round_trip_budget", "grid.width", "code.d", "readout.repetition_size"}) {
    EXPECT_TRUE(has(s.defaults_applied, key)) << key;
  }
  EXPECT_TRUE(has(s.defaults_applied, "layout.r (crosstalk bound)"));
  // Defaults reproduce the explicit file except where that file rounds r.
  const Scenario explicit_file = load_scenario(kDefaults);
  EXPECT_EQ(s.code_distance(), explicit_file.code_distance());
  EXPECT_NEAR(s.layout().array_pitch / s.r_g, 4.6162, 1e-4);
}

TEST(Scenario, WrongDimensionNamesKey) {
  try {
    load_scenario_text("[trap]\nomega0 = \"100 us\"\n", "bad.toml");
    FAIL();
  } catch (const DimensionError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("trap.omega0"), std::string::npos) << msg;
    EXPECT_NE(msg.find("angular frequency"), std::string::npos) << msg;
    EXPECT_NE(msg.find("bad.toml:2"), std::string::npos) << msg;
  }
}

TEST(Scenario, PlainHertzIsNotAngular) {
  EXPECT_THROW(load_scenario_text("[trap]\nomega0 = \"100 kHz\"\n", "t.toml"), DimensionError);
  const Scenario s = load_scenario_text("[trap]\nomega0 = \"2pi x 50 kHz\"\n", "t.toml");
  EXPECT_NEAR(s.omega0.magnitude(), constants::two_pi * 50e3, 1e-6);
}

TEST(Scenario, Errors) {
  EXPECT_THROW(load_scenario_text("[trap]\nomega = \"2pi x 1 kHz\"\n", "t"), ConfigError);
  EXPECT_THROW(load_scenario_text("[nonsense]\n", "t"), ConfigError);
  EXPECT_THROW(load_scenario_text("[gates]\nt_cz = 0.46\n", "t"), ConfigError);
  EXPECT_THROW(load_scenario_text("[gates]\nt_cz = \"0.46\"\n", "t"), ParseError);
  EXPECT_THROW(load_scenario_text("[gates\n", "t"), ParseError);
  EXPECT_THROW(load_scenario_text("[atom]\nspecies = \"Xe\"\n", "t"), ConfigError);
  EXPECT_THROW(load_scenario_text("[gates]\nprotocol = \"magic\"\n", "t"), ConfigError);
  EXPECT_THROW(load_scenario_text("[code]\nd = 10\ntarget_inverse_pl = 1e6\n", "t"), ConfigError);
  EXPECT_THROW(load_scenario_text("[code]\nd = 2\n", "t"), ConfigError);
  EXPECT_THROW(load_scenario_text("[grid]\nzone_x = 1.0\n", "t"), ConfigError);
  EXPECT_THROW(load_scenario_text("[grid]\nrouting = \"diagonal\"\n", "t"), ConfigError);
  EXPECT_THROW(load_scenario_text("[layout]\nr = \"1 um\"\n", "t"), ConfigError);
}

TEST(Scenario, UnknownKeyCarriesLine) {
  try {
    load_scenario_text("[code]\np = 0.001\n\nbogus = 3\n", "s.toml");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("s.toml:4: code.bogus"), std::string::npos) << e.what();
  }
}

TEST(Scenario, TargetSolvesDistance) {
  const Scenario s = load_scenario_text("[code]\ntarget_inverse_pl = 1e6\n", "t");
  EXPECT_EQ(s.code_distance(), 11);
  EXPECT_FALSE(has(s.defaults_applied, "code.d"));
}

TEST(Scenario, CustomSpecies) {
  const Scenario s = load_scenario_text("[species]\nK = \"38.964 u\"\n[atom]\nspecies = \"K\"\n", "t");
  EXPECT_NEAR(s.species_params().mass.magnitude(), 38.964 * constants::atomic_mass_unit, 1e-35);
}

TEST(Scenario, Overrides) {
  const Scenario s =
      load_scenario(kDefaults, {"code.d=11", "gates.t_meas=1 us", "trap.omega0=2pi x 50 kHz", "layout.eta_max=0.02"});
  EXPECT_EQ(s.code_distance(), 11);
  EXPECT_EQ(s.t_meas.magnitude(), 1e-6);
  EXPECT_NEAR(s.omega0.magnitude(), constants::two_pi * 50e3, 1e-6);
  EXPECT_EQ(s.eta_max, 0.02);
  EXPECT_TRUE(s.defaults_applied.empty());
  EXPECT_THROW(load_scenario(kDefaults, {"noequals"}), ConfigError);
  EXPECT_THROW(load_scenario(kDefaults, {"code.d"}), ConfigError);
  try {
    load_scenario(kDefaults, {"trap.omega0=1 s"});
    FAIL();
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("(override): trap.omega0"), std::string::npos) << e.what();
  }
}

TEST(Scenario, HashTracksResolvedValues) {
  const Scenario a = load_scenario(kDefaults);
  const Scenario b = load_scenario(kDefaults);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
  EXPECT_NE(a.hash(), load_scenario(kDefaults, {"code.p=0.0009"}).hash());
  // Hashing covers resolved values, not the text.
  EXPECT_EQ(load_scenario_text("# note\n[gates]\nt_cz = \"0.46us\"\n", "t").hash(),
            load_scenario_text("[gates]\nt_cz = \"0.46 us\"\n", "t").hash());
}

TEST(Scenario, MissingFile) { EXPECT_THROW(load_scenario("/nonexistent/x.toml"), ConfigError); }

}  // namespace
}  // namespace nacost
