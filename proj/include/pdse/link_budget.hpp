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
#include <span>
#include <vector>

#include "pdse/device_models.hpp"

namespace pdse {

inline constexpr double kElectronCharge = 1.602176634e-19;  // C
inline constexpr double kBoltzmann = 1.380649e-23;          // J/K

/// Laser, detector and loss constants of the optical power budget.
/// Field names double as parameter-file keys.
struct PhotonicLinkParams {
  double p_laser_dbm = 10.0;
  double responsivity_a_per_w = 1.2;
  double load_resistance_ohm = 50.0;
  double dark_current_a = 35e-9;
  double temperature_k = 300.0;
  double rin_db_per_hz = -140.0;
  double p_smf_att_db = 0.4;
  double p_ec_il_db = 1.44;
  double p_si_att_db_per_mm = 0.3;
  double d_mrr_mm = 0.0075;
  double p_mrm_il_db = 4.0;
  double p_mrm_obl_db = 0.01;
  double p_splitter_il_db = 0.01;
  double p_mrr_w_il_db = 0.01;
  double p_mrr_w_obl_db = 0.005;

  /// Throws InvalidArgument if a loss is negative or a physical constant is
  /// not strictly positive.
  void validate() const;
};

struct ScalabilityQuery {
  int bit_precision = 4;
  double datarate_gsps = 1.0;
  DpuOrganization org = DpuOrganization::kSmwa;
};

struct ScalabilityResult {
  double p_pd_opt_dbm = 0.0;
  std::int64_t n_max = 0;
  bool fsr_capped = false;
};

struct ScalabilityRow {
  DpuOrganization org;
  double datarate_gsps;
  int bit_precision;
  ScalabilityResult result;
  // False when no detector power reaches the precision; n_max is then 0.
  bool feasible = true;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Detector noise current density in A/sqrt(Hz) at received power `p_pd_w`.
double noise_beta(double p_pd_w, const PhotonicLinkParams& params);

/// Effective number of bits delivered at received power `p_pd_w` (W) and
/// symbol rate `datarate_gsps`.
double enob(double p_pd_w, double datarate_gsps, const PhotonicLinkParams& params);

/// Received power (dBm) at which enob() equals `bit_precision`. Bisection
/// over [-90, +30] dBm; throws InfeasiblePrecision when the bracket holds no
/// root.
double solve_p_pd_opt(double bit_precision, double datarate_gsps,
                      const PhotonicLinkParams& params);

/// Optical power reaching one detector for an n-channel DPE in an m-way
/// split DPU, in dBm.
double link_output_power(std::int64_t n, std::int64_t m, DpuOrganization org,
                         const PhotonicLinkParams& params, const NetworkPenalties& penalties);

/// Largest N (= M) whose delivered power covers the detector requirement,
/// capped at the FSR channel limit. 0 when even N = 1 falls short.
ScalabilityResult max_n(const ScalabilityQuery& query, const PhotonicLinkParams& params,
                        const NetworkPenalties& penalties, const SpectralParams& spectral);

/// Cartesian sweep in (org, datarate, bits) row order. Cells the solver
/// cannot satisfy are kept with feasible = false instead of aborting.
std::vector<ScalabilityRow> sweep_scalability(std::span<const int> bit_precisions,
                                              std::span<const double> datarates_gsps,
                                              std::span<const DpuOrganization> orgs,
                                              const PhotonicLinkParams& params,
                                              const NetworkPenalties& penalties,
                                              const SpectralParams& spectral);

}  // namespace pdse
