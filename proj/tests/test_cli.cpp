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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "nacost/cli.hpp"

namespace nacost::cli {
namespace {

namespace fs = std::filesystem;

const std::string kDefaults = std::string(NACOST_DATA_DIR) + "/paper-defaults.toml";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::size_t data_rows(const std::string& csv) {
  std::size_t n = 0;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') ++n;
  }
  return n;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nacost-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({"foo"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"figure", "fig9"}).code, kExitUsage);
  const auto r = invoke({"connectivity", "--bogus"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST_F(CliTest, ConnectivityJsonIsByteStable) {
  const auto a = dir_ / "a.json", b = dir_ / "b.json";
  ASSERT_EQ(invoke({"connectivity", "--scenario", kDefaults, "--json", a.string()}).code, kExitOk);
  ASSERT_EQ(invoke({"connectivity", "--scenario", kDefaults, "--json", b.string()}).code, kExitOk);
  const std::string ja = slurp(a);
  EXPECT_FALSE(ja.empty());
  EXPECT_EQ(ja, slurp(b));
  const auto doc = report::Json::parse(ja);
  ASSERT_EQ(doc["strategies"].size(), 4u);
  EXPECT_NEAR(doc["strategies"][0]["neighbor_time_s"].get<double>(), 96e-6, 1e-15);
  EXPECT_NEAR(doc["strategies"][1]["neighbor_time_s"].get<double>(), 273e-6, 1e-6);
  EXPECT_NEAR(doc["strategies"][2]["neighbor_time_s"].get<double>(), 20.02e-3, 1e-5);
  EXPECT_TRUE(doc["provenance"]["defaults_applied"].empty());
  EXPECT_EQ(doc["provenance"]["scenario_hash"].get<std::string>().size(), 16u);
}

TEST_F(CliTest, CorruptScenarioLeavesNoArtifact) {
  std::string text = slurp(kDefaults);
  const auto pos = text.find("omega0 = \"2pi x 100 kHz\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 24, "omega0 = \"100 us\"");
  const auto bad = dir_ / "bad.toml";
  std::ofstream(bad) << text;
  const auto out = dir_ / "out.json";
  const auto r = invoke({"connectivity", "--scenario", bad.string(), "--json", out.string()});
  EXPECT_EQ(r.code, kExitModelError);
  EXPECT_NE(r.err.find("trap.omega0"), std::string::npos);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_FALSE(fs::exists(dir_ / "out.json.tmp"));
}

TEST_F(CliTest, ModelErrorExitsOne) {
  EXPECT_EQ(invoke({"bound", "--V", "215 MHz"}).code, kExitModelError);
  EXPECT_EQ(invoke({"code", "--set", "code.p=0.006", "--target", "1e6"}).code, kExitModelError);
  EXPECT_EQ(invoke({"connectivity", "--scenario", (dir_ / "missing.toml").string()}).code, kExitModelError);
}

TEST_F(CliTest, Fig8Grid) {
  const auto csv = dir_ / "fig8.csv";
  const auto r = invoke({"figure", "fig8", "--scenario", kDefaults, "--d", "10", "--budget-range", "0.01:1",
                         "--R-range", "10um:200um", "--resolution", "40", "--csv", csv.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string text = slurp(csv);
  EXPECT_EQ(text.rfind("R_m,round_trip_budget,round_trip_time_s\n", 0), 0u);
  EXPECT_EQ(data_rows(text), 1600u);
  EXPECT_NE(text.find("# scenario_hash="), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "fig8-inset.csv"));
  EXPECT_EQ(data_rows(slurp(dir_ / "fig8-inset.csv")), 40u);
}

TEST_F(CliTest, Fig8RoundTripCell) {
  const auto csv = dir_ / "cell.csv";
  ASSERT_EQ(invoke({"figure", "fig8", "--budget-range", "0.1:1", "--R-range", "64um:100um", "--resolution", "2",
                    "--csv", csv.string()})
                .code,
            kExitOk);
  std::istringstream in(slurp(csv));
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  const double t = std::stod(row.substr(row.rfind(',') + 1));
  EXPECT_NEAR(t, 272e-6, 1e-6);
}

TEST_F(CliTest, NisqGridToStdout) {
  const auto r = invoke({"nisq-grid", "--resolution", "50"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("n,epsilon,loglog_cost\n", 0), 0u);
  EXPECT_EQ(data_rows(r.out), 2500u);
  const auto f = invoke({"figure", "fig2", "--resolution", "50"});
  EXPECT_EQ(f.out, r.out);
}

TEST_F(CliTest, Fig5Grid) {
  const auto r = invoke({"figure", "fig5", "--d", "10", "--tcz-range", "0.1us:1us", "--tbeam-range", "0.1us:2us",
                         "--resolution", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("t_cz_s,t_beam_s,t_gate_s\n", 0), 0u);
  EXPECT_EQ(data_rows(r.out), 25u);
}

TEST_F(CliTest, ConsoleCommands) {
  const auto b = invoke({"bound", "--scenario", kDefaults});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_NE(b.out.find("time-optimal"), std::string::npos);
  const auto t = invoke({"transport", "--R", "64 um", "--dn", "0.05"});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_NE(t.out.find("135.9 us"), std::string::npos) << t.out;
  const auto c = invoke({"code", "--scenario", kDefaults, "--target", "1e6"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_NE(c.out.find("19900"), std::string::npos) << c.out;
  const auto k = invoke({"connectivity", "--scenario", kDefaults});
  ASSERT_EQ(k.code, kExitOk) << k.err;
  EXPECT_NE(k.out.find("long-range"), std::string::npos);
}

TEST_F(CliTest, BoundTraceCheck) {
  const auto trace = dir_ / "trace.csv";
  std::ofstream(trace) << "t_s,p1,p2,p12\n0,0.5,0.5,0\n1e-6,0.5,0.5,0\n";
  const auto json = dir_ / "bound.json";
  const auto r = invoke({"bound", "--V", "2pi x 1 MHz", "--trace", trace.string(), "--json", json.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(json));
}

TEST_F(CliTest, SetOverridesChangeHash) {
  const auto a = dir_ / "a.csv", b = dir_ / "b.csv";
  ASSERT_EQ(invoke({"connectivity", "--scenario", kDefaults, "--csv", a.string()}).code, kExitOk);
  ASSERT_EQ(invoke({"connectivity", "--scenario", kDefaults, "--csv", b.string(), "--set", "gates.t_meas=1 us"}).code,
            kExitOk);
  EXPECT_NE(slurp(a), slurp(b));
  EXPECT_EQ(slurp(b).find("strategy,neighbor_time_s"), 0u);
  std::istringstream in(slurp(b));
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(first.rfind("lattice-surgery-in-place,", 0), 0u);
}

}  // namespace
}  // namespace nacost::cli
