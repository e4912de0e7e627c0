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

#include "pdse/link_budget.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pdse/errors.hpp"
#include "pdse/parallel.hpp"

namespace pdse {
namespace {

constexpr double kBracketLowDbm = -90.0;
constexpr double kBracketHighDbm = 30.0;
// Far below the 0.01 dB the budget needs; keeps the ENOB round trip tight.
constexpr double kSolverToleranceDb = 1e-9;

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0)) throw InvalidArgument(std::string(name) + " must be >= 0");
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw InvalidArgument(std::string(name) + " must be > 0");
}

}  // namespace

void PhotonicLinkParams::validate() const {
  require_positive(responsivity_a_per_w, "responsivity_a_per_w");
  require_positive(load_resistance_ohm, "load_resistance_ohm");
  require_positive(temperature_k, "temperature_k");
  require_nonnegative(dark_current_a, "dark_current_a");
  require_nonnegative(p_smf_att_db, "p_smf_att_db");
  require_nonnegative(p_ec_il_db, "p_ec_il_db");
  require_nonnegative(p_si_att_db_per_mm, "p_si_att_db_per_mm");
  require_nonnegative(d_mrr_mm, "d_mrr_mm");
  require_nonnegative(p_mrm_il_db, "p_mrm_il_db");
  require_nonnegative(p_mrm_obl_db, "p_mrm_obl_db");
  require_nonnegative(p_splitter_il_db, "p_splitter_il_db");
  require_nonnegative(p_mrr_w_il_db, "p_mrr_w_il_db");
  require_nonnegative(p_mrr_w_obl_db, "p_mrr_w_obl_db");
}

double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }

double noise_beta(double p_pd_w, const PhotonicLinkParams& params) {
  if (p_pd_w < 0.0) throw InvalidArgument("detector power must be >= 0 W");
  const double r = params.responsivity_a_per_w;
  const double rin = std::pow(10.0, params.rin_db_per_hz / 10.0);
  const double thermal = 4.0 * kBoltzmann * params.temperature_k / params.load_resistance_ohm;
  const double signal_current = r * p_pd_w;
  const double on = 2.0 * kElectronCharge * (signal_current + params.dark_current_a) + thermal +
                    signal_current * signal_current * rin;
  const double off = 2.0 * kElectronCharge * params.dark_current_a + thermal;
  return std::sqrt(on) + std::sqrt(off);
}

double enob(double p_pd_w, double datarate_gsps, const PhotonicLinkParams& params) {
  if (!(p_pd_w > 0.0)) throw InvalidArgument("detector power must be > 0 W");
  if (!(datarate_gsps > 0.0)) throw InvalidArgument("datarate must be > 0 GS/s");
  const double bandwidth = datarate_gsps * 1e9 / std::sqrt(2.0);
  const double snr = params.responsivity_a_per_w * p_pd_w /
                     (noise_beta(p_pd_w, params) * std::sqrt(bandwidth));
  return (20.0 * std::log10(snr) - 1.76) / 6.02;
}

double solve_p_pd_opt(double bit_precision, double datarate_gsps,
                      const PhotonicLinkParams& params) {
  if (!(bit_precision >= 1.0 && bit_precision <= 16.0)) {
    throw InvalidArgument("bit precision must lie in [1, 16]");
  }
  if (!(datarate_gsps > 0.0)) throw InvalidArgument("datarate must be > 0 GS/s");

  auto excess = [&](double dbm) {
    return enob(dbm_to_watts(dbm), datarate_gsps, params) - bit_precision;
  };
  double lo = kBracketLowDbm;
  double hi = kBracketHighDbm;
  if (excess(lo) > 0.0 || excess(hi) < 0.0) {
    throw InfeasiblePrecision("no detector power in [-90, 30] dBm yields " +
                              std::to_string(bit_precision) + " bits at " +
                              std::to_string(datarate_gsps) + " GS/s");
  }
  while (hi - lo > kSolverToleranceDb) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double link_output_power(std::int64_t n, std::int64_t m, DpuOrganization org,
                         const PhotonicLinkParams& p, const NetworkPenalties& penalties) {
  if (n < 1 || m < 1) throw InvalidArgument("n and m must be >= 1");
  const auto nd = static_cast<double>(n);
  const auto md = static_cast<double>(m);
  return p.p_laser_dbm - p.p_smf_att_db - p.p_ec_il_db - p.p_si_att_db_per_mm * nd * p.d_mrr_mm -
         p.p_mrm_il_db - (nd - 1.0) * p.p_mrm_obl_db - p.p_splitter_il_db * std::log2(md) -
         p.p_mrr_w_il_db - (nd - 1.0) * p.p_mrr_w_obl_db - penalties.of(org) -
         10.0 * std::log10(nd);
}

ScalabilityResult max_n(const ScalabilityQuery& query, const PhotonicLinkParams& params,
                        const NetworkPenalties& penalties, const SpectralParams& spectral) {
  ScalabilityResult result;
  result.p_pd_opt_dbm = solve_p_pd_opt(query.bit_precision, query.datarate_gsps, params);
  const auto cap = fsr_limited_channels(spectral);
  for (std::int64_t n = 1; n <= cap; ++n) {
    if (link_output_power(n, n, query.org, params, penalties) >= result.p_pd_opt_dbm) {
      result.n_max = n;
    }
  }
  result.fsr_capped = result.n_max == cap &&
                      link_output_power(cap + 1, cap + 1, query.org, params, penalties) >=
                          result.p_pd_opt_dbm;
  return result;
}

std::vector<ScalabilityRow> sweep_scalability(std::span<const int> bit_precisions,
                                              std::span<const double> datarates_gsps,
                                              std::span<const DpuOrganization> orgs,
                                              const PhotonicLinkParams& params,
                                              const NetworkPenalties& penalties,
                                              const SpectralParams& spectral) {
  if (bit_precisions.empty() || datarates_gsps.empty() || orgs.empty()) {
    throw InvalidArgument("scalability sweep needs at least one org, datarate and precision");
  }
  std::vector<ScalabilityRow> rows;
  rows.reserve(orgs.size() * datarates_gsps.size() * bit_precisions.size());
  for (auto org : orgs) {
    for (double dr : datarates_gsps) {
      for (int b : bit_precisions) rows.push_back({org, dr, b, {}});
    }
  }
  parallel_for(rows.size(), [&](std::size_t i) {
    auto& row = rows[i];
    try {
      row.result = max_n({row.bit_precision, row.datarate_gsps, row.org}, params, penalties,
                         spectral);
    } catch (const InfeasiblePrecision&) {
      row.result = {std::numeric_limits<double>::quiet_NaN(), 0, false};
      row.feasible = false;
    }
  });
  return rows;
}

}  // namespace pdse
