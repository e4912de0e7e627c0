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

#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "pdse/area_model.hpp"
#include "pdse/compare.hpp"
#include "pdse/errors.hpp"
#include "support.hpp"

using namespace pdse;
using Catch::Approx;

namespace {

AcceleratorConfig reference() {
  AcceleratorConfig c;
  c.org = DpuOrganization::kSmwa;
  c.n = c.m = 83;
  c.dpu_count = 50;
  c.datarate_gsps = 1.0;
  return c;
}

}  // namespace

TEST_CASE("area of the global blocks only") {
  auto c = reference();
  c.dpu_count = 0;
  CHECK(area_model(c) == Approx(2.44e-2 + 1.66e-1));
}

TEST_CASE("area grows linearly with whole tiles") {
  auto c = reference();
  c.dpu_count = 0;
  const double global = area_model(c);
  c.dpu_count = 4;
  const double four = area_model(c) - global;
  c.dpu_count = 8;
  CHECK(area_model(c) - global == Approx(2 * four));
  c.dpu_count = 12;
  CHECK(area_model(c) - global == Approx(3 * four));
  // A partly filled tile still pays for its shared blocks.
  c.dpu_count = 5;
  const double tile = 9e-3 + 1.5e-2 + 2.4e-4 + 6e-5 + 3e-5;
  CHECK(area_model(c) - global == Approx(5 * dpu_area_mm2(c) + 2 * tile));
}

TEST_CASE("reference area is assembled from its parts") {
  const auto c = reference();
  const double rings = 3.0 * 83 * 83 * 1e-4;
  const double guides = 83 * (2.0 * 2 * 83 * 0.0075) * 0.002;
  const double converters = 83 * 2e-3 + 83 * 2.5e-3;
  const double tile = 9e-3 + 1.5e-2 + 2.4e-4 + 6e-5 + 3e-5;
  const double expected = 50 * (rings + guides + converters) + 13 * tile + 2.44e-2 + 1.66e-1;
  CHECK(area_model(c) == Approx(expected).epsilon(1e-12));
  CHECK(area_model(c) == Approx(143.18369).epsilon(1e-7));
}

TEST_CASE("area-proportionate counts") {
  const auto ref = reference();
  const std::array<DpuOrganization, 1> self{DpuOrganization::kSmwa};
  const std::array<std::int64_t, 1> n83{83};
  CHECK(area_proportionate_counts(self, n83, ref).front() == 50);

  const std::array<DpuOrganization, 3> orgs{DpuOrganization::kAsmw, DpuOrganization::kMasw,
                                            DpuOrganization::kSmwa};
  const std::array<std::int64_t, 3> ns{36, 43, 83};
  const auto counts = area_proportionate_counts(orgs, ns, ref);
  const double budget = area_model(ref);
  for (std::size_t i = 0; i < 3; ++i) {
    auto c = ref;
    c.org = orgs[i];
    c.n = c.m = ns[i];
    c.dpu_count = counts[i];
    CHECK(area_model(c) <= budget);
    c.dpu_count = counts[i] + 1;
    CHECK(area_model(c) > budget);
  }

  const std::array<std::int64_t, 1> huge{200};
  auto tiny = ref;
  tiny.dpu_count = 1;
  tiny.n = tiny.m = 2;
  CHECK(area_proportionate_counts(self, huge, tiny).front() == 0);
}

TEST_CASE("reference design points") {
  CHECK(reference_design_point(DpuOrganization::kAsmw, 1.0).dpu_count == 160);
  CHECK(reference_design_point(DpuOrganization::kMasw, 1.0).dpu_count == 186);
  CHECK(reference_design_point(DpuOrganization::kSmwa, 1.0).dpu_count == 50);
  CHECK(reference_design_point(DpuOrganization::kAsmw, 10.0).dpu_count == 291);
  CHECK(reference_design_point(DpuOrganization::kMasw, 10.0).dpu_count == 295);
  CHECK(reference_design_point(DpuOrganization::kSmwa, 10.0).dpu_count == 198);
  CHECK(reference_design_point(DpuOrganization::kMasw, 5.0).n == 21);
  CHECK_THROWS_AS(reference_design_point(DpuOrganization::kAsmw, 2.0), ConfigError);

  DesignSpace s;
  s.paper_counts = true;
  const auto c = design_point(s, DpuOrganization::kSmwa, 10.0);
  CHECK(c.n == 30);
  CHECK(c.m == 30);
  CHECK(c.dpu_count == 198);
}

TEST_CASE("solved design points respect the area budget") {
  DesignSpace s;
  for (auto org : kAllOrganizations) {
    const auto c = design_point(s, org, 1.0);
    CHECK(c.n == max_n({4, 1.0, org}, s.params.link, s.params.penalties, s.params.spectral).n_max);
    auto ref = reference();
    CHECK(area_model(c) <= area_model(ref));
  }
  s.fixed_n = 16;
  CHECK(design_point(s, DpuOrganization::kAsmw, 5.0).n == 16);
}

TEST_CASE("geometric mean") {
  const std::array<double, 3> same{2.5, 2.5, 2.5};
  CHECK(geometric_mean(same) == Approx(2.5));
  const std::array<double, 2> two{1.0, 4.0};
  CHECK(geometric_mean(two) == Approx(2.0));
  const std::array<double, 1> zero{0.0};
  CHECK_THROWS_AS(geometric_mean(zero), InvalidArgument);
}

TEST_CASE("comparison normalizes to the baseline cell") {
  const auto models = oracle::bundled_models();
  DesignSpace s;
  s.paper_counts = true;
  const std::array<double, 2> drs{1.0, 10.0};
  const auto rows = compare_accelerators(models, kAllOrganizations, drs, s);
  REQUIRE(rows.size() == 4 * 3 * 2 + 3 * 2);
  const CompareRow* base = nullptr;
  for (const auto& r : rows) {
    if (!r.gmean && r.report.model == "resnet50" && r.report.org == DpuOrganization::kAsmw &&
        r.report.datarate_gsps == 10.0) {
      base = &r;
    }
  }
  REQUIRE(base);
  CHECK(base->norm_fps == 1.0);
  CHECK(base->norm_fps_per_w == 1.0);
  CHECK(base->norm_fps_per_w_per_mm2 == 1.0);
  for (std::size_t i = 24; i < rows.size(); ++i) {
    CHECK(rows[i].gmean);
    CHECK(rows[i].report.model == "gmean");
    std::array<double, 4> fps{};
    for (std::size_t m = 0; m < 4; ++m) fps[m] = rows[m * 6 + (i - 24)].report.fps;
    CHECK(rows[i].report.fps == Approx(geometric_mean(fps)));
  }

  const std::array<DpuOrganization, 1> smwa{DpuOrganization::kSmwa};
  CHECK_THROWS_AS(compare_accelerators(models, smwa, drs, s), ConfigError);
}
