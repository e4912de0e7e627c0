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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace pdse {

/// Order in which a DPU applies Aggregation, Splitting, Modulation and
/// Weighting to its wavelength channels.
enum class DpuOrganization : std::uint8_t { kAsmw, kMasw, kSmwa };

inline constexpr std::array<DpuOrganization, 3> kAllOrganizations = {
    DpuOrganization::kAsmw, DpuOrganization::kMasw, DpuOrganization::kSmwa};

/// Lower-case name ("asmw", "masw", "smwa").
std::string_view to_string(DpuOrganization org);

/// Upper-case display name ("ASMW", ...).
std::string_view display_name(DpuOrganization org);

/// Case-insensitive parse; throws InvalidArgument on anything else.
DpuOrganization parse_organization(std::string_view name);

struct CrosstalkProfile {
  bool inter_modulation = false;
  bool cross_weight = false;
  bool filter_truncation = false;

  friend bool operator==(const CrosstalkProfile&, const CrosstalkProfile&) = default;
};

struct LossProfile {
  double through_loss_db = 0.0;
  double propagation_loss_db = 0.0;
  double network_penalty_db = 0.0;
};

/// Aggregate crosstalk/filter/propagation penalty per organization, in dB.
/// The component bounds are kept for sensitivity sweeps; the totals are
/// what the link budget consumes.
struct NetworkPenalties {
  double asmw_db = 5.8;
  double masw_db = 4.8;
  double smwa_db = 1.8;

  double inter_modulation_max_db = 1.0;
  double cross_weight_max_db = 3.0;
  double filter_truncation_max_db = 0.5;

  double of(DpuOrganization org) const;
};

struct SpectralParams {
  double fsr_nm = 50.0;
  double fwhm_nm = 0.7;
  double channel_spacing_nm = 0.25;

  /// Spacing derived from a custom resonance width (0.4 x FWHM).
  static SpectralParams from_fwhm(double fsr_nm, double fwhm_nm);
};

/// Which crosstalk mechanisms the organization exhibits.
CrosstalkProfile crosstalk_profile(DpuOrganization org);

/// Out-of-resonance MRMs/MRRs a channel passes before the detector.
/// n = 0 throws InvalidArgument.
std::int64_t out_of_resonance_device_count(DpuOrganization org, std::int64_t n);

double through_loss_db(DpuOrganization org, std::int64_t n, double per_device_obl_db);

/// Default aggregate penalty.
double network_penalty_db(DpuOrganization org);

/// Waveguide length a channel travels through the ring arrays of one DPE.
/// `routing_overhead` (>= 1) stretches the SMWA per-channel waveguides.
double waveguide_length_mm(DpuOrganization org, std::int64_t n, double d_mrr_mm,
                           double routing_overhead);

double propagation_loss_db(DpuOrganization org, std::int64_t n, double d_mrr_mm,
                           double si_att_db_per_mm, double routing_overhead);

struct LossModelParams {
  double per_device_obl_db = 0.01;
  double d_mrr_mm = 0.0075;
  double si_att_db_per_mm = 0.3;
  double routing_overhead = 2.0;
  NetworkPenalties penalties{};
};

LossProfile loss_profile(DpuOrganization org, std::int64_t n, const LossModelParams& p);

/// floor(fsr / spacing). Zero or negative spacing throws InvalidArgument.
std::int64_t fsr_limited_channels(const SpectralParams& spectral);

/// Ring count of one DPU with n channels and m DPEs
/// (ASMW 2nm, MASW n + nm, SMWA 2nm + nm).
std::int64_t ring_count(DpuOrganization org, std::int64_t n, std::int64_t m);

}  // namespace pdse
