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

// Reference implementations shared by the unit and acceptance tests. They
// are written from the defining formulas and deliberately share no code with
// the library beyond its plain data types.

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "pdse/link_budget.hpp"
#include "pdse/workload.hpp"

namespace oracle {

inline std::filesystem::path model_dir() { return PDSE_MODEL_DIR; }

inline std::vector<std::string> bundled_model_names() {
  return {"googlenet", "mobilenet_v2", "resnet50", "shufflenet_v2"};
}

inline std::vector<pdse::CnnModel> bundled_models() {
  std::vector<pdse::CnnModel> out;
  for (const auto& n : bundled_model_names()) out.push_back(pdse::load_model(model_dir() / (n + ".csv")));
  return out;
}

// ENOB straight from the shot/thermal/RIN noise expression, long double.
inline long double enob_reference(long double p_w, long double dr_gsps, const pdse::PhotonicLinkParams& p) {
  const long double q = 1.602176634e-19L;
  const long double k = 1.380649e-23L;
  const long double r = p.responsivity_a_per_w;
  const long double i_d = p.dark_current_a;
  const long double thermal = 4.0L * k * p.temperature_k / p.load_resistance_ohm;
  const long double rin = std::pow(10.0L, static_cast<long double>(p.rin_db_per_hz) / 10.0L);
  const long double beta = std::sqrt(2.0L * q * (r * p_w + i_d) + thermal + r * r * p_w * p_w * rin) +
                           std::sqrt(2.0L * q * i_d + thermal);
  const long double snr = r * p_w / (beta * std::sqrt(dr_gsps * 1e9L / std::sqrt(2.0L)));
  return (20.0L * std::log10(snr) - 1.76L) / 6.02L;
}

// Lowest point of a 0.001 dB grid over [-90, 30] dBm reaching `bits`;
// NaN if none does.
inline double grid_scan_p_pd_opt(int bits, double dr_gsps, const pdse::PhotonicLinkParams& p) {
  for (int i = 0; i <= 120000; ++i) {
    const long double dbm = -90.0L + 0.001L * i;
    const long double w = 1e-3L * std::pow(10.0L, dbm / 10.0L);
    if (enob_reference(w, dr_gsps, p) >= bits) return static_cast<double>(dbm);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Direct (sliding-window) grouped convolution over a CHW tensor. Filters
// are laid out [out_c][in_c / groups][kh][kw].
inline std::vector<std::int64_t> direct_conv(const std::vector<std::int64_t>& input,
                                             const std::vector<std::int64_t>& filters,
                                             const pdse::LayerDescriptor& l) {
  const auto oh = (l.in_h + 2 * l.padding - l.kernel_h) / l.stride + 1;
  const auto ow = (l.in_w + 2 * l.padding - l.kernel_w) / l.stride + 1;
  const auto cin_g = l.in_channels / l.groups;
  const auto cout_g = l.out_channels / l.groups;
  std::vector<std::int64_t> out(static_cast<std::size_t>(l.out_channels * oh * ow), 0);
  for (std::int64_t oc = 0; oc < l.out_channels; ++oc) {
    const auto g = oc / cout_g;
    for (std::int64_t y = 0; y < oh; ++y) {
      for (std::int64_t x = 0; x < ow; ++x) {
        std::int64_t acc = 0;
        for (std::int64_t ci = 0; ci < cin_g; ++ci) {
          const auto c = g * cin_g + ci;
          for (std::int64_t ky = 0; ky < l.kernel_h; ++ky) {
            for (std::int64_t kx = 0; kx < l.kernel_w; ++kx) {
              const auto iy = y * l.stride + ky - l.padding;
              const auto ix = x * l.stride + kx - l.padding;
              if (iy < 0 || ix < 0 || iy >= l.in_h || ix >= l.in_w) continue;
              acc += input[static_cast<std::size_t>((c * l.in_h + iy) * l.in_w + ix)] *
                     filters[static_cast<std::size_t>(((oc * cin_g + ci) * l.kernel_h + ky) *
                                                          l.kernel_w + kx)];
            }
          }
        }
        out[static_cast<std::size_t>((oc * oh + y) * ow + x)] = acc;
      }
    }
  }
  return out;
}

// Random ungrouped conv with dims <= 8 and channels <= 4 whose kernel fits.
inline pdse::LayerDescriptor random_conv(std::mt19937& rng) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  pdse::LayerDescriptor l;
  l.name = "rand";
  l.kind = pdse::LayerKind::kConv;
  for (;;) {
    l.in_channels = pick(1, 4);
    l.out_channels = pick(1, 4);
    l.in_h = pick(1, 8);
    l.in_w = pick(1, 8);
    l.kernel_h = pick(1, 4);
    l.kernel_w = pick(1, 4);
    l.stride = pick(1, 3);
    l.padding = pick(0, 2);
    if (l.kernel_h <= l.in_h + 2 * l.padding && l.kernel_w <= l.in_w + 2 * l.padding) return l;
  }
}

inline std::vector<std::int64_t> random_values(std::mt19937& rng, std::int64_t count) {
  std::uniform_int_distribution<int> d(-128, 127);
  std::vector<std::int64_t> v(static_cast<std::size_t>(count));
  for (auto& x : v) x = d(rng);
  return v;
}

// Sum of sliced partial products, each shifted into place.
inline std::uint64_t shift_add_product(std::uint32_t a, std::uint32_t b, int bits, int hw) {
  const std::uint32_t mask = (1u << hw) - 1u;
  std::uint64_t sum = 0;
  for (int i = 0; i * hw < bits; ++i) {
    for (int j = 0; j * hw < bits; ++j) {
      const std::uint64_t pa = (a >> (i * hw)) & mask;
      const std::uint64_t pb = (b >> (j * hw)) & mask;
      sum += (pa * pb) << ((i + j) * hw);
    }
  }
  return sum;
}

}  // namespace oracle
