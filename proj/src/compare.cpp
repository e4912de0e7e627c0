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

#include "pdse/compare.hpp"

#include <array>
#include <cmath>

#include "pdse/area_model.hpp"
#include "pdse/errors.hpp"
#include "pdse/parallel.hpp"

namespace pdse {
namespace {

constexpr double kBaselineDatarate = 10.0;
constexpr std::string_view kBaselineModel = "resnet50";

}  // namespace

AcceleratorConfig design_point(const DesignSpace& space, DpuOrganization org,
                               double datarate_gsps) {
  const auto& p = space.params;
  AcceleratorConfig c;
  c.org = org;
  c.datarate_gsps = datarate_gsps;
  c.hw_bits = p.hw_bits;
  c.dpus_per_tile = p.dpus_per_tile;
  c.peripherals = p.peripherals;
  c.options = p.options;

  if (space.paper_counts) {
    const auto& row = reference_design_point(org, datarate_gsps);
    c.n = c.m = space.fixed_n > 0 ? space.fixed_n : row.n;
    c.dpu_count = row.dpu_count;
    c.validate();
    return c;
  }

  std::int64_t n = space.fixed_n;
  if (n <= 0) {
    n = max_n({p.hw_bits, datarate_gsps, org}, p.link, p.penalties, p.spectral).n_max;
    if (n < 1) {
      throw ConfigError(std::string(display_name(org)) + " cannot reach " +
                        std::to_string(p.hw_bits) + "-bit precision at this datarate");
    }
  }
  AcceleratorConfig ref = c;
  ref.org = DpuOrganization::kSmwa;
  ref.n = ref.m = space.reference_n;
  ref.dpu_count = space.reference_dpu_count;
  const std::array<DpuOrganization, 1> orgs{org};
  const std::array<std::int64_t, 1> ns{n};
  const auto count = area_proportionate_counts(orgs, ns, ref).front();
  if (count < 1) {
    throw ConfigError(std::string(display_name(org)) + " with N=" + std::to_string(n) +
                      " does not fit the reference area");
  }
  c.n = c.m = n;
  c.dpu_count = count;
  c.validate();
  return c;
}

std::vector<SimReport> simulate_sweep(std::span<const CnnModel> models,
                                      std::span<const DpuOrganization> orgs,
                                      std::span<const double> datarates_gsps,
                                      const DesignSpace& space) {
  std::vector<AcceleratorConfig> configs;
  for (auto org : orgs) {
    for (double dr : datarates_gsps) configs.push_back(design_point(space, org, dr));
  }
  const std::size_t per_model = configs.size();
  std::vector<SimReport> reports(models.size() * per_model);
  parallel_for(reports.size(), [&](std::size_t i) {
    reports[i] = run_inference(models[i / per_model], configs[i % per_model]);
  });
  return reports;
}

double geometric_mean(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("geometric mean of an empty set");
  double log_sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0)) throw InvalidArgument("geometric mean needs positive values");
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(values.size()));
}

std::vector<CompareRow> compare_accelerators(std::span<const CnnModel> models,
                                             std::span<const DpuOrganization> orgs,
                                             std::span<const double> datarates_gsps,
                                             const DesignSpace& space) {
  const auto reports = simulate_sweep(models, orgs, datarates_gsps, space);

  const SimReport* base = nullptr;
  for (const auto& r : reports) {
    if (r.model == kBaselineModel && r.org == DpuOrganization::kAsmw &&
        std::fabs(r.datarate_gsps - kBaselineDatarate) < 1e-9) {
      base = &r;
      break;
    }
  }
  if (base == nullptr) {
    throw ConfigError("baseline cell (ASMW, resnet50, 10 GS/s) is not part of the sweep");
  }
  if (!(base->fps_per_w_per_mm2 > 0.0) || std::isinf(base->fps)) {
    throw ConfigError("baseline cell has degenerate metrics");
  }

  auto normalized = [base](CompareRow row) {
    row.norm_fps = row.report.fps / base->fps;
    row.norm_fps_per_w = row.report.fps_per_w / base->fps_per_w;
    row.norm_fps_per_w_per_mm2 = row.report.fps_per_w_per_mm2 / base->fps_per_w_per_mm2;
    return row;
  };

  std::vector<CompareRow> rows;
  for (const auto& r : reports) rows.push_back(normalized({r}));

  // A single model is its own geometric mean.
  if (models.size() < 2) return rows;
  const std::size_t per_model = orgs.size() * datarates_gsps.size();
  for (std::size_t cell = 0; cell < per_model; ++cell) {
    std::vector<double> fps, fpw, fpwa, energy, power, latency;
    for (std::size_t m = 0; m < models.size(); ++m) {
      const auto& r = reports[m * per_model + cell];
      fps.push_back(r.fps);
      fpw.push_back(r.fps_per_w);
      fpwa.push_back(r.fps_per_w_per_mm2);
      latency.push_back(r.latency_s);
      energy.push_back(r.energy_j);
      power.push_back(r.avg_power_w);
    }
    SimReport g = reports[cell];
    g.model = "gmean";
    g.latency_s = geometric_mean(latency);
    g.energy_j = geometric_mean(energy);
    g.avg_power_w = geometric_mean(power);
    g.fps = geometric_mean(fps);
    g.fps_per_w = geometric_mean(fpw);
    g.fps_per_w_per_mm2 = geometric_mean(fpwa);
    g.energy_breakdown_j = {};
    g.counters = {};
    CompareRow row{g, true};
    rows.push_back(normalized(row));
  }
  return rows;
}

}  // namespace pdse
