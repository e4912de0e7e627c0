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

#include <span>
#include <string>
#include <vector>

#include "pdse/params_file.hpp"
#include "pdse/simulator.hpp"
#include "pdse/workload.hpp"

namespace pdse {

/// How (N, DPU count) is chosen for each organization and datarate.
struct DesignSpace {
  ParamSet params;
  // Use the reference (N, count) table instead of max_n + area matching.
  bool paper_counts = false;
  // Area reference: SMWA at this N and count, same datarate.
  std::int64_t reference_n = 83;
  std::int64_t reference_dpu_count = 50;
  // Overrides the solved N when > 0.
  std::int64_t fixed_n = 0;
};

/// Fully resolved accelerator for one (org, datarate) cell. n_max is
/// solved at bit precision params.hw_bits.
AcceleratorConfig design_point(const DesignSpace& space, DpuOrganization org,
                               double datarate_gsps);

struct CompareRow {
  SimReport report;
  bool gmean = false;
  double norm_fps = 0.0;
  double norm_fps_per_w = 0.0;
  double norm_fps_per_w_per_mm2 = 0.0;
};

/// One simulation per (model, org, datarate) in that nesting order,
/// followed by one geometric-mean row per (org, datarate) when more than
/// one model is given. Values are
/// normalized to ASMW running resnet50 at 10 GS/s; ConfigError if that
/// cell is not part of the sweep.
std::vector<CompareRow> compare_accelerators(std::span<const CnnModel> models,
                                             std::span<const DpuOrganization> orgs,
                                             std::span<const double> datarates_gsps,
                                             const DesignSpace& space);

/// Simulations only, same ordering as compare_accelerators.
std::vector<SimReport> simulate_sweep(std::span<const CnnModel> models,
                                      std::span<const DpuOrganization> orgs,
                                      std::span<const double> datarates_gsps,
                                      const DesignSpace& space);

double geometric_mean(std::span<const double> values);

}  // namespace pdse
