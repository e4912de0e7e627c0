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

#include "pdse/device_models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "pdse/errors.hpp"

namespace pdse {

std::string_view to_string(DpuOrganization org) {
  switch (org) {
    case DpuOrganization::kAsmw: return "asmw";
    case DpuOrganization::kMasw: return "masw";
    case DpuOrganization::kSmwa: return "smwa";
  }
  return "?";
}

std::string_view display_name(DpuOrganization org) {
  switch (org) {
    case DpuOrganization::kAsmw: return "ASMW";
    case DpuOrganization::kMasw: return "MASW";
    case DpuOrganization::kSmwa: return "SMWA";
  }
  return "?";
}

DpuOrganization parse_organization(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto org : kAllOrganizations) {
    if (lower == to_string(org)) return org;
  }
  throw InvalidArgument("unknown DPU organization '" + std::string(name) +
                        "' (expected asmw, masw or smwa)");
}

double NetworkPenalties::of(DpuOrganization org) const {
  switch (org) {
    case DpuOrganization::kAsmw: return asmw_db;
    case DpuOrganization::kMasw: return masw_db;
    case DpuOrganization::kSmwa: return smwa_db;
  }
  return 0.0;
}

SpectralParams SpectralParams::from_fwhm(double fsr_nm, double fwhm_nm) {
  return SpectralParams{fsr_nm, fwhm_nm, 0.4 * fwhm_nm};
}

CrosstalkProfile crosstalk_profile(DpuOrganization org) {
  // Modulators/weights see neighbouring channels only after aggregation;
  // filter truncation needs modulated light entering a multiplexer.
  switch (org) {
    case DpuOrganization::kAsmw: return {true, true, false};
    case DpuOrganization::kMasw: return {false, true, true};
    case DpuOrganization::kSmwa: return {false, false, true};
  }
  return {};
}

std::int64_t out_of_resonance_device_count(DpuOrganization org, std::int64_t n) {
  if (n < 1) throw InvalidArgument("channel count must be >= 1");
  if (n == 1) return 0;
  switch (org) {
    case DpuOrganization::kAsmw: return 2 * (n - 1);
    case DpuOrganization::kMasw: return n;
    case DpuOrganization::kSmwa: return 2;
  }
  return 0;
}

double through_loss_db(DpuOrganization org, std::int64_t n, double per_device_obl_db) {
  if (per_device_obl_db < 0.0) throw InvalidArgument("out-of-band loss must be >= 0 dB");
  return static_cast<double>(out_of_resonance_device_count(org, n)) * per_device_obl_db;
}

double network_penalty_db(DpuOrganization org) { return NetworkPenalties{}.of(org); }

double waveguide_length_mm(DpuOrganization org, std::int64_t n, double d_mrr_mm,
                           double routing_overhead) {
  if (n < 1) throw InvalidArgument("channel count must be >= 1");
  if (d_mrr_mm < 0.0) throw InvalidArgument("ring pitch must be >= 0 mm");
  if (routing_overhead < 1.0) throw InvalidArgument("routing overhead must be >= 1");
  const auto nd = static_cast<double>(n);
  switch (org) {
    case DpuOrganization::kAsmw: return 2.0 * nd * d_mrr_mm;
    case DpuOrganization::kMasw: return (nd + 1.0) * d_mrr_mm;
    case DpuOrganization::kSmwa: return routing_overhead * 2.0 * nd * d_mrr_mm;
  }
  return 0.0;
}

double propagation_loss_db(DpuOrganization org, std::int64_t n, double d_mrr_mm,
                           double si_att_db_per_mm, double routing_overhead) {
  if (si_att_db_per_mm < 0.0) throw InvalidArgument("waveguide attenuation must be >= 0");
  return waveguide_length_mm(org, n, d_mrr_mm, routing_overhead) * si_att_db_per_mm;
}

LossProfile loss_profile(DpuOrganization org, std::int64_t n, const LossModelParams& p) {
  return LossProfile{
      through_loss_db(org, n, p.per_device_obl_db),
      propagation_loss_db(org, n, p.d_mrr_mm, p.si_att_db_per_mm, p.routing_overhead),
      p.penalties.of(org),
  };
}

std::int64_t fsr_limited_channels(const SpectralParams& spectral) {
  if (!(spectral.channel_spacing_nm > 0.0)) {
    throw InvalidArgument("channel spacing must be > 0 nm");
  }
  if (!(spectral.fsr_nm > 0.0)) throw InvalidArgument("FSR must be > 0 nm");
  // Nudge before flooring so exact quotients such as 50/0.25 survive rounding.
  const double ratio = spectral.fsr_nm / spectral.channel_spacing_nm;
  const auto channels = static_cast<std::int64_t>(std::floor(ratio * (1.0 + 1e-12)));
  if (channels < 1) throw InvalidArgument("FSR narrower than one channel spacing");
  return channels;
}

std::int64_t ring_count(DpuOrganization org, std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw InvalidArgument("n and m must be >= 1");
  switch (org) {
    case DpuOrganization::kAsmw: return 2 * n * m;
    case DpuOrganization::kMasw: return n + n * m;
    case DpuOrganization::kSmwa: return 2 * n * m + n * m;
  }
  return 0;
}

}  // namespace pdse
