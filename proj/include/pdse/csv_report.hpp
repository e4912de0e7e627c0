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

#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>

#include "pdse/compare.hpp"
#include "pdse/device_models.hpp"
#include "pdse/link_budget.hpp"
#include "pdse/simulator.hpp"

namespace pdse {

/// 9 significant digits; "inf" for infinities.
std::string format_value(double v);

void write_report_csv(std::ostream& out, std::span<const SimReport> reports);
/// Long format: model,org,datarate_gsps,component,energy_j
void write_breakdown_csv(std::ostream& out, std::span<const SimReport> reports);
void write_compare_csv(std::ostream& out, std::span<const CompareRow> rows);
void write_scalability_csv(std::ostream& out, std::span<const ScalabilityRow> rows);

struct PenaltyRow {
  DpuOrganization org;
  std::int64_t n;
  CrosstalkProfile crosstalk;
  LossProfile losses;
};
void write_penalty_csv(std::ostream& out, std::span<const PenaltyRow> rows);

/// Echo of the resolved design points: org,datarate_gsps,n,m,dpu_count,tiles,area_mm2
void write_config_csv(std::ostream& out, std::span<const AcceleratorConfig> configs);

/// Writes through a sibling temporary file and renames it into place, so
/// readers never observe a partial file. "-" writes to stdout.
void write_atomically(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& body);

}  // namespace pdse
