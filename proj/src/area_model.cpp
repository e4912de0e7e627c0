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

#include "pdse/area_model.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "pdse/errors.hpp"
#include "pdse/simulator.hpp"

namespace pdse {
namespace {

using enum DpuOrganization;

constexpr std::array<ReferenceDesignPoint, 9> kReferenceTable{{
    {kAsmw, 1.0, 36, 160},
    {kMasw, 1.0, 43, 186},
    {kSmwa, 1.0, 83, 50},
    {kAsmw, 5.0, 17, 265},
    {kMasw, 5.0, 21, 275},
    {kSmwa, 5.0, 42, 147},
    {kAsmw, 10.0, 12, 291},
    {kMasw, 10.0, 15, 295},
    {kSmwa, 10.0, 30, 198},
}};

}  // namespace

std::span<const ReferenceDesignPoint> reference_design_points() { return kReferenceTable; }

const ReferenceDesignPoint& reference_design_point(DpuOrganization org, double datarate_gsps) {
  for (const auto& p : kReferenceTable) {
    if (p.org == org && std::fabs(p.datarate_gsps - datarate_gsps) < 1e-9) return p;
  }
  std::ostringstream msg;
  msg << "no reference design point for " << display_name(org) << " at " << datarate_gsps
      << " GS/s (available: 1, 5, 10)";
  throw ConfigError(msg.str());
}

double dpu_area_mm2(const AcceleratorConfig& c) {
  const auto& o = c.options;
  const auto& p = c.peripherals;
  const double rings = static_cast<double>(ring_count(c.org, c.n, c.m)) * o.mrr_area_mm2;
  const double guides = static_cast<double>(c.m) *
                        waveguide_length_mm(c.org, c.n, o.d_mrr_mm, o.routing_overhead) *
                        o.waveguide_pitch_mm;
  const double adcs = static_cast<double>(c.m) * p.adc_for(c.datarate_gsps).area_mm2;
  const double dacs = static_cast<double>(c.n) * p.dac.area_mm2;
  return rings + guides + adcs + dacs;
}

double area_model(const AcceleratorConfig& c) {
  const auto& p = c.peripherals;
  const double global = p.io_interface.area_mm2 + p.edram.area_mm2;
  if (c.dpu_count == 0) return global;
  const double per_tile = p.bus.area_mm2 + p.router.area_mm2 + p.pooling_unit.area_mm2 +
                          p.activation_unit.area_mm2 + p.reduction_network.area_mm2;
  return static_cast<double>(c.dpu_count) * dpu_area_mm2(c) +
         static_cast<double>(c.tile_count()) * per_tile + global;
}

std::vector<std::int64_t> area_proportionate_counts(std::span<const DpuOrganization> orgs,
                                                    std::span<const std::int64_t> n_per_org,
                                                    const AcceleratorConfig& reference) {
  if (orgs.size() != n_per_org.size()) {
    throw InvalidArgument("one N per organization is required");
  }
  reference.validate();
  const double budget = area_model(reference);
  std::vector<std::int64_t> counts;
  counts.reserve(orgs.size());
  for (std::size_t i = 0; i < orgs.size(); ++i) {
    AcceleratorConfig c = reference;
    c.org = orgs[i];
    c.n = c.m = n_per_org[i];
    auto area_at = [&c](std::int64_t count) {
      c.dpu_count = count;
      return area_model(c);
    };
    if (area_at(1) > budget) {
      counts.push_back(0);
      continue;
    }
    std::int64_t lo = 1;
    std::int64_t hi = 2;
    while (area_at(hi) <= budget) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      const auto mid = lo + (hi - lo) / 2;
      (area_at(mid) <= budget ? lo : hi) = mid;
    }
    counts.push_back(lo);
  }
  return counts;
}

}  // namespace pdse
