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

#include "pdse/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <variant>
#include <vector>

#include "pdse/errors.hpp"
#include "pdse/event_queue.hpp"

namespace pdse {
namespace {

constexpr double kNs = 1e-9;
constexpr double kMw = 1e-3;
constexpr std::int64_t kInputXfer = -1;
constexpr std::int64_t kOutputXfer = -2;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Even split of `total` over `parts`, earlier parts taking the remainder.
std::int64_t share(std::int64_t total, std::int64_t parts, std::int64_t index) {
  return total / parts + (index < total % parts ? 1 : 0);
}

void add(std::array<double, kEnergyComponentCount>& e, EnergyComponent c, double joules) {
  e[static_cast<std::size_t>(c)] += joules;
}

using Step = std::variant<const LayerPlan*, const UnitWork*>;

class Engine {
 public:
  Engine(const AcceleratorConfig& config, std::vector<Step> steps)
      : cfg_(config), steps_(std::move(steps)) {}

  void run() {
    if (!steps_.empty()) begin_step(0, 0.0);
    while (!queue_.empty()) dispatch(queue_.pop());
  }

  double finish_time() const { return finish_s_; }
  double compute_time() const { return compute_s_; }
  const SimCounters& counters() const { return counters_; }
  const std::array<double, kEnergyComponentCount>& dynamic_energy() const { return energy_; }
  std::uint64_t events() const { return queue_.pushed(); }

 private:
  struct GemmState {
    std::int64_t rounds = 1;
    std::int64_t reduced_rounds = 0;
    double fabric_free_s = 0.0;
    double last_compute_s = 0.0;
  };

  double period_s() const { return 1.0 / (cfg_.datarate_gsps * 1e9); }
  double cycle_s() const { return 1.0 / (cfg_.peripherals.clock_ghz * 1e9); }

  double transfer_s(std::int64_t elements, int bits) const {
    const auto& p = cfg_.peripherals;
    if (elements == 0) return 0.0;
    const auto txns = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(elements) * bits / cfg_.options.edram_width_bits));
    return static_cast<double>(txns) * p.edram.latency_ns * kNs +
           (p.bus_cycles + p.router_cycles) * cycle_s();
  }

  double weight_load_s() const {
    const auto& p = cfg_.peripherals;
    return (cfg_.options.weight_tuning == WeightTuning::kElectroOptic ? p.eo_tuning_latency_ns
                                                                      : p.to_tuning_latency_ns) *
           kNs;
  }

  void begin_step(std::size_t index, double now) {
    current_ = index;
    if (const auto* const* plan = std::get_if<const LayerPlan*>(&steps_[index])) {
      state_ = GemmState{};
      state_.rounds = std::max<std::int64_t>(1, (*plan)->weight_load_events);
      queue_.push(now + transfer_s((*plan)->input_elements, (*plan)->operand_bits),
                  EventKind::kBufferXferDone, index, kInputXfer);
    } else {
      const auto& unit = *std::get<const UnitWork*>(steps_[index]);
      const auto& spec = unit.kind == LayerKind::kPool ? cfg_.peripherals.pooling_unit
                                                       : cfg_.peripherals.activation_unit;
      const auto ops = ceil_div(unit.elements, cfg_.options.unit_vector_width);
      const auto waves = ceil_div(ops, cfg_.tile_count());
      add(energy_,
          unit.kind == LayerKind::kPool ? EnergyComponent::kPoolingUnit
                                        : EnergyComponent::kActivationUnit,
          spec.power_mw * kMw * spec.latency_ns * kNs * static_cast<double>(ops));
      queue_.push(now + static_cast<double>(waves) * spec.latency_ns * kNs, EventKind::kUnitDone,
                  index);
    }
  }

  const LayerPlan& plan() const { return *std::get<const LayerPlan*>(steps_[current_]); }

  void start_round(std::int64_t round, double now) {
    double load = weight_load_s();
    if (cfg_.options.overlap_weight_load && round > 0) {
      load = std::max(0.0, load - state_.last_compute_s);
    }
    queue_.push(now + load, EventKind::kWeightLoadDone, current_, round);
  }

  void dispatch(const Event& e) {
    switch (e.kind) {
      case EventKind::kBufferXferDone:
        if (e.round == kInputXfer) {
          start_round(0, e.time_s);
        } else {
          queue_.push(e.time_s, EventKind::kLayerDone, e.layer);
        }
        break;
      case EventKind::kWeightLoadDone: {
        const auto& p = plan();
        ++counters_.weight_loads;
        const auto cycles = share(p.symbol_cycles, state_.rounds, e.round);
        const double busy = static_cast<double>(cycles) * period_s();
        state_.last_compute_s = busy;
        compute_s_ += busy;
        counters_.symbol_cycles += cycles;
        charge_compute(p, e.round);
        queue_.push(e.time_s + busy, EventKind::kDpuPassDone, e.layer, e.round);
        break;
      }
      case EventKind::kDpuPassDone: {
        const auto& p = plan();
        const auto psums = share(p.psum_reductions, state_.rounds, e.round);
        const auto& red = cfg_.peripherals.reduction_network;
        const auto txns = cfg_.options.pipelined_reduction
                              ? ceil_div(psums, cfg_.options.reduction_lanes)
                              : psums;
        const double start = std::max(e.time_s, state_.fabric_free_s);
        state_.fabric_free_s = start + static_cast<double>(txns) * red.latency_ns * kNs;
        counters_.psum_reductions += psums;
        add(energy_, EnergyComponent::kReductionNetwork,
            red.power_mw * kMw * red.latency_ns * kNs * static_cast<double>(psums));
        queue_.push(state_.fabric_free_s, EventKind::kReductionDone, e.layer, e.round);
        if (cfg_.options.pipelined_reduction && e.round + 1 < state_.rounds) {
          start_round(e.round + 1, e.time_s);
        }
        break;
      }
      case EventKind::kReductionDone: {
        ++state_.reduced_rounds;
        if (!cfg_.options.pipelined_reduction && e.round + 1 < state_.rounds) {
          start_round(e.round + 1, e.time_s);
        } else if (state_.reduced_rounds == state_.rounds) {
          const auto& p = plan();
          queue_.push(e.time_s + transfer_s(p.output_elements, p.operand_bits),
                      EventKind::kBufferXferDone, e.layer, kOutputXfer);
        }
        break;
      }
      case EventKind::kUnitDone:
        queue_.push(e.time_s, EventKind::kLayerDone, e.layer);
        break;
      case EventKind::kLayerDone:
        finish_s_ = e.time_s;
        if (e.layer + 1 < steps_.size()) begin_step(e.layer + 1, e.time_s);
        break;
    }
  }

  // ADCs convert every DPE result; DACs drive the n input columns of every
  // active DPU each symbol.
  void charge_compute(const LayerPlan& p, std::int64_t round) {
    const auto dots = share(p.total_dpe_dotproducts, state_.rounds, round);
    counters_.dpe_dotproducts += dots;
    const auto& adc = cfg_.peripherals.adc_for(cfg_.datarate_gsps);
    const auto& dac = cfg_.peripherals.dac;
    add(energy_, EnergyComponent::kAdc,
        adc.power_mw * kMw * period_s() * static_cast<double>(dots));
    const auto dpu_cycles = ceil_div(dots, cfg_.m);
    add(energy_, EnergyComponent::kDac,
        dac.power_mw * kMw * period_s() * static_cast<double>(dpu_cycles * cfg_.n));
  }

  const AcceleratorConfig& cfg_;
  std::vector<Step> steps_;
  EventQueue queue_;
  std::size_t current_ = 0;
  GemmState state_;
  double finish_s_ = 0.0;
  double compute_s_ = 0.0;
  SimCounters counters_;
  std::array<double, kEnergyComponentCount> energy_{};
};

bool close(double a, double b, double rel) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= rel * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

}  // namespace

std::string_view to_string(EnergyComponent c) {
  switch (c) {
    case EnergyComponent::kLaser: return "laser";
    case EnergyComponent::kWeightTuning: return "weight_tuning";
    case EnergyComponent::kAdc: return "adc";
    case EnergyComponent::kDac: return "dac";
    case EnergyComponent::kReductionNetwork: return "reduction_network";
    case EnergyComponent::kActivationUnit: return "activation_unit";
    case EnergyComponent::kPoolingUnit: return "pooling_unit";
    case EnergyComponent::kEdram: return "edram";
    case EnergyComponent::kIoInterface: return "io_interface";
    case EnergyComponent::kBus: return "bus";
    case EnergyComponent::kRouter: return "router";
  }
  return "?";
}

void SimReport::check_invariants() const {
  auto fail = [this](const std::string& what) {
    throw InvariantViolation("report for " + model + "/" + std::string(to_string(org)) + ": " +
                             what);
  };
  for (double v : {latency_s, compute_latency_s, energy_j, avg_power_w, area_mm2, fps, fps_per_w,
                   fps_per_w_per_mm2}) {
    if (std::isnan(v) || v < 0.0) fail("negative or NaN metric");
  }
  if (latency_s > 0.0 && !close(fps, 1.0 / latency_s, 1e-12)) fail("fps != 1/latency");
  if (latency_s == 0.0 && !std::isinf(fps)) fail("zero latency must give infinite fps");
  if (avg_power_w > 0.0 && !close(fps_per_w, fps / avg_power_w, 1e-12)) fail("fps/W mismatch");
  if (area_mm2 > 0.0 && !close(fps_per_w_per_mm2, fps_per_w / area_mm2, 1e-12)) {
    fail("fps/W/mm2 mismatch");
  }
  const double sum = std::accumulate(energy_breakdown_j.begin(), energy_breakdown_j.end(), 0.0);
  if (std::fabs(sum - energy_j) > 1e-9 * std::max(energy_j, 1e-300)) {
    fail("energy breakdown does not sum to total");
  }
  if (compute_latency_s > latency_s * (1.0 + 1e-12)) fail("compute time exceeds latency");
}

double always_on_power_w(const AcceleratorConfig& c) {
  const auto& p = c.peripherals;
  const auto dpus = static_cast<double>(c.dpu_count);
  const auto tiles = static_cast<double>(c.tile_count());
  const double laser =
      c.options.laser_power_mw_per_wavelength * static_cast<double>(c.n) * dpus /
      c.options.wall_plug_efficiency;
  const double weight_rings = static_cast<double>(c.n * c.m) * dpus;
  const double tuning = c.options.weight_tuning == WeightTuning::kElectroOptic
                            ? p.eo_tuning_uw_per_fsr * 1e-3 * weight_rings
                            : p.to_tuning_mw_per_fsr * weight_rings;
  return (laser + tuning + p.edram.power_mw + p.io_interface.power_mw +
          tiles * (p.bus.power_mw + p.router.power_mw)) *
         kMw;
}

SimReport run_plan(const ModelPlan& plan, const std::string& model_name,
                   const AcceleratorConfig& config) {
  config.validate();
  for (const auto& lp : plan.layers) {
    if (lp.chunks_per_output != ceil_div(lp.gemm.k, config.n) ||
        lp.symbol_cycles != ceil_div(lp.total_dpe_dotproducts, config.m * config.dpu_count)) {
      throw InvalidArgument("plan for layer '" + lp.name +
                            "' was built for a different accelerator configuration");
    }
  }

  std::vector<std::pair<std::size_t, Step>> ordered;
  for (const auto& lp : plan.layers) ordered.emplace_back(lp.layer_index, &lp);
  for (const auto& u : plan.units) ordered.emplace_back(u.layer_index, &u);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Step> steps;
  steps.reserve(ordered.size());
  for (auto& [idx, step] : ordered) steps.push_back(step);

  Engine engine(config, std::move(steps));
  engine.run();

  SimReport r;
  r.model = model_name;
  r.org = config.org;
  r.datarate_gsps = config.datarate_gsps;
  r.n = config.n;
  r.m = config.m;
  r.dpu_count = config.dpu_count;
  r.degenerate = plan.layers.empty();
  r.latency_s = engine.finish_time();
  r.compute_latency_s = engine.compute_time();
  r.counters = engine.counters();
  r.counters.events = engine.events();
  r.energy_breakdown_j = engine.dynamic_energy();

  const auto& p = config.peripherals;
  const auto dpus = static_cast<double>(config.dpu_count);
  const auto tiles = static_cast<double>(config.tile_count());
  const double t = r.latency_s;
  add(r.energy_breakdown_j, EnergyComponent::kLaser,
      config.options.laser_power_mw_per_wavelength * static_cast<double>(config.n) * dpus /
          config.options.wall_plug_efficiency * kMw * t);
  const double weight_rings = static_cast<double>(config.n * config.m) * dpus;
  add(r.energy_breakdown_j, EnergyComponent::kWeightTuning,
      (config.options.weight_tuning == WeightTuning::kElectroOptic
           ? p.eo_tuning_uw_per_fsr * 1e-3 * weight_rings
           : p.to_tuning_mw_per_fsr * weight_rings) *
          kMw * t);
  add(r.energy_breakdown_j, EnergyComponent::kEdram, p.edram.power_mw * kMw * t);
  add(r.energy_breakdown_j, EnergyComponent::kIoInterface, p.io_interface.power_mw * kMw * t);
  add(r.energy_breakdown_j, EnergyComponent::kBus, tiles * p.bus.power_mw * kMw * t);
  add(r.energy_breakdown_j, EnergyComponent::kRouter, tiles * p.router.power_mw * kMw * t);
  r.energy_j = std::accumulate(r.energy_breakdown_j.begin(), r.energy_breakdown_j.end(), 0.0);

  r.area_mm2 = area_model(config);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (t > 0.0) {
    r.avg_power_w = r.energy_j / t;
    r.fps = 1.0 / t;
  } else {
    r.avg_power_w = always_on_power_w(config);
    r.fps = kInf;
  }
  r.fps_per_w = r.fps / r.avg_power_w;
  r.fps_per_w_per_mm2 = r.fps_per_w / r.area_mm2;
  r.check_invariants();
  return r;
}

SimReport run_inference(const CnnModel& model, const AcceleratorConfig& config) {
  const auto plan = plan_model(model, config);
  return run_plan(plan, model.name, config);
}

}  // namespace pdse
