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
#include <iosfwd>
#include <string>
#include <vector>

#include "pdse/peripherals.hpp"
#include "pdse/workload.hpp"

namespace pdse {

/// Output-stationary schedule of one GEMM-bearing layer.
///
/// Every output element is split into ceil(k / n) zero-padded chunks per
/// bit-slice pass; each chunk is one DPE dot product and one psum. The
/// counters are totals over all groups of the layer.
struct LayerPlan {
  std::size_t layer_index = 0;
  std::string name;
  GemmShape gemm;
  std::int64_t groups = 1;
  SliceFactor slices;
  std::int64_t chunks_per_output = 0;
  std::int64_t slice_passes = 0;
  std::int64_t total_dpe_dotproducts = 0;
  std::int64_t psum_reductions = 0;
  std::int64_t weight_load_events = 0;
  std::int64_t symbol_cycles = 0;
  std::int64_t input_elements = 0;
  std::int64_t output_elements = 0;
  // Width of an activation word in the buffers.
  int operand_bits = 8;

  std::int64_t outputs() const { return gemm.rows * gemm.cols * groups; }
  std::int64_t psum_values_per_output() const { return chunks_per_output * slice_passes; }
};

/// Pool or activation work handed to the tile units.
struct UnitWork {
  std::size_t layer_index = 0;
  std::string name;
  LayerKind kind = LayerKind::kPool;
  std::int64_t elements = 0;
};

struct ModelPlan {
  std::vector<LayerPlan> layers;
  std::vector<UnitWork> units;
};

LayerPlan plan_layer(const GemmShape& gemm, const SliceFactor& slices,
                     const AcceleratorConfig& config, std::int64_t groups = 1);

/// One LayerPlan per conv/fc layer and one UnitWork per pool/activation
/// layer, both in model order.
ModelPlan plan_model(const CnnModel& model, const AcceleratorConfig& config);

/// Debug dump, header
/// layer,rows,k,cols,chunks_per_output,slice_passes,dpe_dotproducts,symbol_cycles,psum_reductions,weight_loads
void write_plan_csv(std::ostream& out, const std::vector<LayerPlan>& plans);

}  // namespace pdse
