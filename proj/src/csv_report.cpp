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

#include "pdse/csv_report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <system_error>

#include "pdse/area_model.hpp"
#include "pdse/errors.hpp"

namespace pdse {
namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_report_csv(std::ostream& out, std::span<const SimReport> reports) {
  out << "model,org,datarate_gsps,n,m,dpu_count,latency_s,energy_j,avg_power_w,area_mm2,fps,"
         "fps_per_w,fps_per_w_per_mm2\n";
  for (const auto& r : reports) {
    out << r.model << ',' << display_name(r.org) << ',' << format_value(r.datarate_gsps) << ','
        << r.n << ',' << r.m << ',' << r.dpu_count << ',' << format_value(r.latency_s) << ','
        << format_value(r.energy_j) << ',' << format_value(r.avg_power_w) << ','
        << format_value(r.area_mm2) << ',' << format_value(r.fps) << ','
        << format_value(r.fps_per_w) << ',' << format_value(r.fps_per_w_per_mm2) << '\n';
  }
}

void write_breakdown_csv(std::ostream& out, std::span<const SimReport> reports) {
  out << "model,org,datarate_gsps,component,energy_j\n";
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < kEnergyComponentCount; ++i) {
      out << r.model << ',' << display_name(r.org) << ',' << format_value(r.datarate_gsps) << ','
          << to_string(static_cast<EnergyComponent>(i)) << ','
          << format_value(r.energy_breakdown_j[i]) << '\n';
    }
  }
}

void write_compare_csv(std::ostream& out, std::span<const CompareRow> rows) {
  out << "model,org,datarate_gsps,n,m,dpu_count,fps,fps_per_w,fps_per_w_per_mm2,norm_fps,"
         "norm_fps_per_w,norm_fps_per_w_per_mm2\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << r.model << ',' << display_name(r.org) << ',' << format_value(r.datarate_gsps) << ','
        << r.n << ',' << r.m << ',' << r.dpu_count << ',' << format_value(r.fps) << ','
        << format_value(r.fps_per_w) << ',' << format_value(r.fps_per_w_per_mm2) << ','
        << format_value(row.norm_fps) << ',' << format_value(row.norm_fps_per_w) << ','
        << format_value(row.norm_fps_per_w_per_mm2) << '\n';
  }
}

void write_scalability_csv(std::ostream& out, std::span<const ScalabilityRow> rows) {
  out << "org,datarate_gsps,bit_precision,p_pd_opt_dbm,n_max,fsr_capped\n";
  for (const auto& row : rows) {
    out << display_name(row.org) << ',' << format_value(row.datarate_gsps) << ','
        << row.bit_precision << ',' << format_value(row.result.p_pd_opt_dbm) << ','
        << row.result.n_max << ',' << flag(row.result.fsr_capped) << '\n';
  }
}

void write_penalty_csv(std::ostream& out, std::span<const PenaltyRow> rows) {
  out << "org,n,inter_modulation,cross_weight,filter_truncation,through_loss_db,"
         "propagation_loss_db,network_penalty_db,total_db\n";
  for (const auto& row : rows) {
    const auto& l = row.losses;
    out << display_name(row.org) << ',' << row.n << ',' << flag(row.crosstalk.inter_modulation)
        << ',' << flag(row.crosstalk.cross_weight) << ',' << flag(row.crosstalk.filter_truncation)
        << ',' << format_value(l.through_loss_db) << ',' << format_value(l.propagation_loss_db)
        << ',' << format_value(l.network_penalty_db) << ','
        << format_value(l.through_loss_db + l.propagation_loss_db + l.network_penalty_db) << '\n';
  }
}

void write_config_csv(std::ostream& out, std::span<const AcceleratorConfig> configs) {
  out << "org,datarate_gsps,n,m,dpu_count,tiles,area_mm2\n";
  for (const auto& c : configs) {
    out << display_name(c.org) << ',' << format_value(c.datarate_gsps) << ',' << c.n << ','
        << c.m << ',' << c.dpu_count << ',' << c.tile_count() << ','
        << format_value(area_model(c)) << '\n';
  }
}

void write_atomically(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& body) {
  if (path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + path.string());
    body(out);
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw ConfigError("write to " + path.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ConfigError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

}  // namespace pdse
