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

#include "pdse/peripherals.hpp"

#include <string>

#include "pdse/errors.hpp"

namespace pdse {
namespace {

void check(const ComponentSpec& c, const char* name) {
  if (c.power_mw < 0.0 || c.latency_ns < 0.0 || c.area_mm2 < 0.0) {
    throw InvalidArgument(std::string(name) + ": power, latency and area must be >= 0");
  }
}

}  // namespace

const ComponentSpec& PeripheralParams::adc_for(double datarate_gsps) const {
  if (!(datarate_gsps > 0.0)) throw InvalidArgument("datarate must be > 0 GS/s");
  if (datarate_gsps <= 1.0) return adc_1gsps;
  if (datarate_gsps <= 5.0) return adc_5gsps;
  if (datarate_gsps <= 10.0) return adc_10gsps;
  throw ConfigError("no ADC rated for " + std::to_string(datarate_gsps) + " GS/s");
}

void PeripheralParams::validate() const {
  check(reduction_network, "reduction_network");
  check(activation_unit, "activation_unit");
  check(io_interface, "io_interface");
  check(pooling_unit, "pooling_unit");
  check(edram, "edram");
  check(bus, "bus");
  check(router, "router");
  check(dac, "dac");
  check(adc_1gsps, "adc_1gsps");
  check(adc_5gsps, "adc_5gsps");
  check(adc_10gsps, "adc_10gsps");
  if (bus_cycles < 0.0 || router_cycles < 0.0 || eo_tuning_uw_per_fsr < 0.0 ||
      eo_tuning_latency_ns < 0.0 || to_tuning_mw_per_fsr < 0.0 || to_tuning_latency_ns < 0.0) {
    throw InvalidArgument("tuning and cycle counts must be >= 0");
  }
  if (!(clock_ghz > 0.0)) throw InvalidArgument("clock_ghz must be > 0");
}

void SimOptions::validate() const {
  if (reduction_lanes < 1) throw InvalidArgument("reduction_lanes must be >= 1");
  if (unit_vector_width < 1) throw InvalidArgument("unit_vector_width must be >= 1");
  if (!(wall_plug_efficiency > 0.0 && wall_plug_efficiency <= 1.0)) {
    throw InvalidArgument("wall_plug_efficiency must lie in (0, 1]");
  }
  if (!(edram_width_bits > 0.0)) throw InvalidArgument("edram_width_bits must be > 0");
  if (laser_power_mw_per_wavelength < 0.0 || mrr_area_mm2 < 0.0 || waveguide_pitch_mm < 0.0 ||
      d_mrr_mm < 0.0) {
    throw InvalidArgument("laser power, areas and pitches must be >= 0");
  }
  if (routing_overhead < 1.0) throw InvalidArgument("routing_overhead must be >= 1");
}

std::int64_t AcceleratorConfig::tile_count() const {
  return (dpu_count + dpus_per_tile - 1) / dpus_per_tile;
}

void AcceleratorConfig::validate() const {
  if (n < 1 || m < 1) throw InvalidArgument("DPE size n and DPE count m must be >= 1");
  if (dpu_count < 1) throw InvalidArgument("dpu_count must be >= 1");
  if (dpus_per_tile < 1) throw InvalidArgument("dpus_per_tile must be >= 1");
  if (hw_bits < 1) throw InvalidArgument("hw_bits must be >= 1");
  peripherals.adc_for(datarate_gsps);
  peripherals.validate();
  options.validate();
}

}  // namespace pdse
