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

#include <cstdint>
#include <span>
#include <vector>

#include "pdse/device_models.hpp"
#include "pdse/peripherals.hpp"

namespace pdse {

/// Reference operating point (N and DPU count) of one organization at one
/// datarate, used by the fixed-count mode.
struct ReferenceDesignPoint {
  DpuOrganization org;
  double datarate_gsps;
  std::int64_t n;
  std::int64_t dpu_count;
};

std::span<const ReferenceDesignPoint> reference_design_points();

/// Entry for (org, datarate); ConfigError when the table has none.
const ReferenceDesignPoint& reference_design_point(DpuOrganization org, double datarate_gsps);

/// Area of one DPU's rings, waveguides, ADCs and DACs, in mm^2.
double dpu_area_mm2(const AcceleratorConfig& config);

/// For each org, the largest DPU count (N = M = n_per_org[i]) whose chip
/// area does not exceed the reference's. Peripherals, datarate and options
/// are taken from the reference. 0 means even a single DPU is too large.
std::vector<std::int64_t> area_proportionate_counts(std::span<const DpuOrganization> orgs,
                                                    std::span<const std::int64_t> n_per_org,
                                                    const AcceleratorConfig& reference);

}  // namespace pdse
