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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "pdse/mapper.hpp"
#include "pdse/peripherals.hpp"
#include "pdse/workload.hpp"

namespace pdse {

enum class EnergyComponent : std::uint8_t {
  kLaser,
  kWeightTuning,
  kAdc,
  kDac,
  kReductionNetwork,
  kActivationUnit,
  kPoolingUnit,
  kEdram,
  kIoInterface,
  kBus,
  kRouter,
};

inline constexpr std::size_t kEnergyComponentCount = 11;

std::string_view to_string(EnergyComponent c);

struct SimCounters {
  std::int64_t symbol_cycles = 0;
  std::int64_t psum_reductions = 0;
  std::int64_t weight_loads = 0;
  std::int64_t dpe_dotproducts = 0;
  std::uint64_t events = 0;
};

struct SimReport {
  std::string model;
  DpuOrganization org = DpuOrganization::kSmwa;
  double datarate_gsps = 0.0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t dpu_count = 0;

  double latency_s = 0.0;
  double compute_latency_s = 0.0;
  double energy_j = 0.0;
  double avg_power_w = 0.0;
  double area_mm2 = 0.0;
  double fps = 0.0;
  double fps_per_w = 0.0;
  double fps_per_w_per_mm2 = 0.0;
  std::array<double, kEnergyComponentCount> energy_breakdown_j{};
  SimCounters counters;
  // Set when the model carries no GEMM work.
  bool degenerate = false;

  double energy_of(EnergyComponent c) const {
    return energy_breakdown_j[static_cast<std::size_t>(c)];
  }

  /// Throws InvariantViolation if the derived metrics disagree with the
  /// primary ones.
  void check_invariants() const;
};

/// Executes the model layer by layer on the configured accelerator.
SimReport run_inference(const CnnModel& model, const AcceleratorConfig& config);

/// Same, from an existing plan. Throws InvalidArgument when the plan was
/// built for a different DPE geometry.
SimReport run_plan(const ModelPlan& plan, const std::string& model_name,
                   const AcceleratorConfig& config);

/// Chip area in mm^2. dpu_count = 0 leaves only the global blocks.
double area_model(const AcceleratorConfig& config);

/// Electrical power drawn regardless of activity, in W.
double always_on_power_w(const AcceleratorConfig& config);

}  // namespace pdse
