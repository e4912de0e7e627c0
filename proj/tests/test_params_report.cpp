/*
 * Copyright 2026 The photonic-dse Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "pdse/csv_report.hpp"
#include "pdse/errors.hpp"
#include "pdse/params_file.hpp"

using namespace pdse;

namespace {

ParamSet parse(const std::string& text) {
  std::istringstream in(text);
  return parse_params(in, "p.txt");
}

}  // namespace

TEST_CASE("parameter file overrides") {
  const auto p = parse(
      "# comment\n"
      "p_laser_dbm = 12.5\n"
      "\n"
      "penalty.smwa_db=2  # inline\n"
      "sim.pipelined_reduction = false\n"
      "sim.weight_tuning = to\n"
      "adc_10gsps.power_mw = 31\n"
      "hw_bits = 3\n");
  CHECK(p.link.p_laser_dbm == 12.5);
  CHECK(p.penalties.smwa_db == 2.0);
  CHECK_FALSE(p.options.pipelined_reduction);
  CHECK(p.options.weight_tuning == WeightTuning::kThermoOptic);
  CHECK(p.peripherals.adc_10gsps.power_mw == 31.0);
  CHECK(p.hw_bits == 3);
  CHECK(p.link.p_ec_il_db == 1.44);
}

TEST_CASE("parameter file errors carry the line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 9999;
  };
  CHECK(line_of("p_laser_dbm = 10\nbogus_key = 1\n") == 2);
  CHECK(line_of("p_laser_dbm = ten\n") == 1);
  CHECK(line_of("\n\np_laser_dbm\n") == 3);
  CHECK(line_of("p_laser_dbm = 1\np_laser_dbm = 2\n") == 2);
  CHECK(line_of("sim.weight_tuning = laser\n") == 1);
  CHECK_THROWS_AS(parse("p_ec_il_db = -3\n"), ParseError);
  CHECK_THROWS_AS(load_params("/nonexistent/params.txt"), ParseError);
}

TEST_CASE("seeded parameter file round-trips") {
  std::ostringstream out;
  write_params(out, ParamSet{});
  const auto text = out.str();
  CHECK(text.find("p_smf_att_db = 0.4  # dB") != std::string::npos);
  CHECK(text.find("bus.latency_cycles = 5") != std::string::npos);
  std::ostringstream again;
  write_params(again, parse(text));
  CHECK(again.str() == text);
}

TEST_CASE("number formatting") {
  CHECK(format_value(1.0) == "1");
  CHECK(format_value(1.0 / 3.0) == "0.333333333");
  CHECK(format_value(1234567890123.0) == "1.23456789e+12");
  CHECK(format_value(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_value(std::nan("")) == "nan");
}

TEST_CASE("report CSV layout") {
  SimReport r;
  r.model = "m";
  r.org = DpuOrganization::kMasw;
  r.datarate_gsps = 5;
  r.n = r.m = 21;
  r.dpu_count = 275;
  r.latency_s = 0.5;
  r.fps = 2;
  std::ostringstream out;
  write_report_csv(out, {&r, 1});
  CHECK(out.str() ==
        "model,org,datarate_gsps,n,m,dpu_count,latency_s,energy_j,avg_power_w,area_mm2,fps,"
        "fps_per_w,fps_per_w_per_mm2\nm,MASW,5,21,21,275,0.5,0,0,0,2,0,0\n");

  std::ostringstream bd;
  write_breakdown_csv(bd, {&r, 1});
  std::string line;
  std::istringstream lines(bd.str());
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 1 + static_cast<int>(kEnergyComponentCount));
}

TEST_CASE("atomic writes leave no temporary behind") {
  const auto dir = std::filesystem::temp_directory_path() / "pdse_atomic_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  write_atomically(path, [](std::ostream& o) { o << "a\n"; });
  write_atomically(path, [](std::ostream& o) { o << "b\n"; });
  std::ifstream in(path);
  std::string s;
  std::getline(in, s);
  CHECK(s == "b");
  CHECK_FALSE(std::filesystem::exists(dir / "out.csv.tmp"));
  CHECK_THROWS_AS(write_atomically(dir / "no" / "such" / "dir.csv", [](std::ostream&) {}),
                  ConfigError);
  std::filesystem::remove_all(dir);
}
