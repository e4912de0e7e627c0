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

#include "pdse/device_models.hpp"

namespace pdse {

/// Power, latency and area of one electronic peripheral instance.
struct ComponentSpec {
  double power_mw = 0.0;
  double latency_ns = 0.0;
  double area_mm2 = 0.0;
};

struct PeripheralParams {
  ComponentSpec reduction_network{0.050, 3.125, 3.00e-5};
  ComponentSpec activation_unit{0.52, 0.78, 6.00e-5};
  ComponentSpec io_interface{140.18, 0.78, 2.44e-2};
  ComponentSpec pooling_unit{0.4, 3.125, 2.40e-4};
  ComponentSpec edram{41.1, 1.56, 1.66e-1};
  // Bus and router latencies are given in clock cycles.
  ComponentSpec bus{7.0, 0.0, 9.00e-3};
  ComponentSpec router{42.0, 0.0, 1.50e-2};
  double bus_cycles = 5.0;
  double router_cycles = 2.0;
  ComponentSpec dac{12.5, 0.78, 2.50e-3};
  ComponentSpec adc_1gsps{2.55, 0.78, 2e-3};
  ComponentSpec adc_5gsps{11.0, 0.78, 21e-3};
  ComponentSpec adc_10gsps{30.0, 0.78, 103e-3};
  double eo_tuning_uw_per_fsr = 80.0;
  double eo_tuning_latency_ns = 20.0;
  double to_tuning_mw_per_fsr = 275.0;
  double to_tuning_latency_ns = 4000.0;
  double clock_ghz = 1.282;

  /// Slowest ADC whose rating covers `datarate_gsps`; ConfigError above
  /// 10 GS/s.
  const ComponentSpec& adc_for(double datarate_gsps) const;

  /// Throws InvalidArgument if any power, latency or area is negative.
  void validate() const;
};

enum class WeightTuning : std::uint8_t { kElectroOptic, kThermoOptic };

/// Simulator knobs the peripheral table leaves open.
struct SimOptions {
  bool pipelined_reduction = true;
  std::int64_t reduction_lanes = 64;
  double laser_power_mw_per_wavelength = 10.0;
  double wall_plug_efficiency = 0.2;
  double edram_width_bits = 256.0;
  std::int64_t unit_vector_width = 64;
  WeightTuning weight_tuning = WeightTuning::kElectroOptic;
  bool overlap_weight_load = false;
  double mrr_area_mm2 = 1e-4;
  double waveguide_pitch_mm = 0.002;
  double routing_overhead = 2.0;
  double d_mrr_mm = 0.0075;

  void validate() const;
};

/// One photonic GEMM accelerator instance.
struct AcceleratorConfig {
  DpuOrganization org = DpuOrganization::kSmwa;
  std::int64_t n = 1;
  std::int64_t m = 1;
  std::int64_t dpu_count = 1;
  std::int64_t dpus_per_tile = 4;
  double datarate_gsps = 1.0;
  int hw_bits = 4;
  PeripheralParams peripherals{};
  SimOptions options{};

  std::int64_t tile_count() const;
  /// Throws InvalidArgument on n, m, dpu_count < 1 or a bad datarate.
  void validate() const;
};

}  // namespace pdse
