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

#include "pdse/mapper.hpp"

#include <ostream>

#include "pdse/errors.hpp"

namespace pdse {
namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

LayerPlan plan_layer(const GemmShape& gemm, const SliceFactor& slices,
                     const AcceleratorConfig& config, std::int64_t groups) {
  config.validate();
  if (gemm.rows < 1 || gemm.k < 1 || gemm.cols < 1 || groups < 1) {
    throw InvalidArgument("GEMM dimensions and group count must be >= 1");
  }
  LayerPlan plan;
  plan.gemm = gemm;
  plan.groups = groups;
  plan.slices = slices;
  plan.chunks_per_output = ceil_div(gemm.k, config.n);
  plan.slice_passes = slices.passes;

  const auto lanes = config.m * config.dpu_count;
  const auto outputs = gemm.rows * gemm.cols * groups;
  plan.total_dpe_dotproducts = plan.chunks_per_output * outputs * plan.slice_passes;
  plan.psum_reductions = outputs * (plan.psum_values_per_output() - 1);
  plan.symbol_cycles = ceil_div(plan.total_dpe_dotproducts, lanes);
  // A DPE holds one weight chunk and streams every input row through it.
  plan.weight_load_events =
      ceil_div(gemm.cols * groups * plan.chunks_per_output * slices.weight_slices, lanes);
  plan.input_elements = gemm.rows * gemm.k * groups;
  plan.output_elements = outputs;
  return plan;
}

ModelPlan plan_model(const CnnModel& model, const AcceleratorConfig& config) {
  ModelPlan out;
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    const auto& layer = model.layers[i];
    if (auto work = layer_gemm(layer)) {
      auto plan = plan_layer(work->shape, bit_slices(layer.model_bits, config.hw_bits), config,
                             work->groups);
      plan.layer_index = i;
      plan.name = layer.name;
      // Activations move through the buffers un-unfolded.
      plan.input_elements = layer.input_shape().elements();
      plan.operand_bits = layer.model_bits;
      out.layers.push_back(std::move(plan));
    } else {
      const auto elements = layer.kind == LayerKind::kPool ? layer.output_shape().elements()
                                                            : layer.input_shape().elements();
      out.units.push_back({i, layer.name, layer.kind, elements});
    }
  }
  return out;
}

void write_plan_csv(std::ostream& out, const std::vector<LayerPlan>& plans) {
  out << "layer,rows,k,cols,chunks_per_output,slice_passes,dpe_dotproducts,symbol_cycles,"
         "psum_reductions,weight_loads\n";
  for (const auto& p : plans) {
    out << p.name << ',' << p.gemm.rows << ',' << p.gemm.k << ',' << p.gemm.cols * p.groups << ','
        << p.chunks_per_output << ',' << p.slice_passes << ',' << p.total_dpe_dotproducts << ','
        << p.symbol_cycles << ',' << p.psum_reductions << ',' << p.weight_load_events << '\n';
  }
}

}  // namespace pdse
