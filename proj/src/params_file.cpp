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

#include "pdse/params_file.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string_view>
#include <variant>
#include <vector>

#include "pdse/errors.hpp"

namespace pdse {
namespace {

using Slot = std::variant<double*, std::int64_t*, int*, bool*, WeightTuning*>;

struct Field {
  std::string key;
  std::string unit;
  Slot slot;
};

void add_component(std::vector<Field>& f, const std::string& name, ComponentSpec& c,
                   bool latency_in_cycles = false) {
  f.push_back({name + ".power_mw", "mW", &c.power_mw});
  if (!latency_in_cycles) f.push_back({name + ".latency_ns", "ns", &c.latency_ns});
  f.push_back({name + ".area_mm2", "mm^2", &c.area_mm2});
}

std::vector<Field> fields(ParamSet& p) {
  std::vector<Field> f;
  auto& l = p.link;
  f.push_back({"p_laser_dbm", "dBm per wavelength", &l.p_laser_dbm});
  f.push_back({"responsivity_a_per_w", "A/W", &l.responsivity_a_per_w});
  f.push_back({"load_resistance_ohm", "ohm", &l.load_resistance_ohm});
  f.push_back({"dark_current_a", "A", &l.dark_current_a});
  f.push_back({"temperature_k", "K", &l.temperature_k});
  f.push_back({"rin_db_per_hz", "dB/Hz", &l.rin_db_per_hz});
  f.push_back({"p_smf_att_db", "dB", &l.p_smf_att_db});
  f.push_back({"p_ec_il_db", "dB", &l.p_ec_il_db});
  f.push_back({"p_si_att_db_per_mm", "dB/mm", &l.p_si_att_db_per_mm});
  f.push_back({"d_mrr_mm", "mm", &l.d_mrr_mm});
  f.push_back({"p_mrm_il_db", "dB", &l.p_mrm_il_db});
  f.push_back({"p_mrm_obl_db", "dB", &l.p_mrm_obl_db});
  f.push_back({"p_splitter_il_db", "dB per 1:2 stage", &l.p_splitter_il_db});
  f.push_back({"p_mrr_w_il_db", "dB", &l.p_mrr_w_il_db});
  f.push_back({"p_mrr_w_obl_db", "dB", &l.p_mrr_w_obl_db});

  auto& n = p.penalties;
  f.push_back({"penalty.asmw_db", "dB", &n.asmw_db});
  f.push_back({"penalty.masw_db", "dB", &n.masw_db});
  f.push_back({"penalty.smwa_db", "dB", &n.smwa_db});
  f.push_back({"penalty.inter_modulation_max_db", "dB", &n.inter_modulation_max_db});
  f.push_back({"penalty.cross_weight_max_db", "dB", &n.cross_weight_max_db});
  f.push_back({"penalty.filter_truncation_max_db", "dB", &n.filter_truncation_max_db});

  f.push_back({"spectral.fsr_nm", "nm", &p.spectral.fsr_nm});
  f.push_back({"spectral.fwhm_nm", "nm", &p.spectral.fwhm_nm});
  f.push_back({"spectral.channel_spacing_nm", "nm", &p.spectral.channel_spacing_nm});

  auto& per = p.peripherals;
  add_component(f, "reduction_network", per.reduction_network);
  add_component(f, "activation_unit", per.activation_unit);
  add_component(f, "io_interface", per.io_interface);
  add_component(f, "pooling_unit", per.pooling_unit);
  add_component(f, "edram", per.edram);
  add_component(f, "bus", per.bus, true);
  f.push_back({"bus.latency_cycles", "clock cycles", &per.bus_cycles});
  add_component(f, "router", per.router, true);
  f.push_back({"router.latency_cycles", "clock cycles", &per.router_cycles});
  add_component(f, "dac", per.dac);
  add_component(f, "adc_1gsps", per.adc_1gsps);
  add_component(f, "adc_5gsps", per.adc_5gsps);
  add_component(f, "adc_10gsps", per.adc_10gsps);
  f.push_back({"eo_tuning.power_uw_per_fsr", "uW per FSR per ring", &per.eo_tuning_uw_per_fsr});
  f.push_back({"eo_tuning.latency_ns", "ns", &per.eo_tuning_latency_ns});
  f.push_back({"to_tuning.power_mw_per_fsr", "mW per FSR per ring", &per.to_tuning_mw_per_fsr});
  f.push_back({"to_tuning.latency_ns", "ns", &per.to_tuning_latency_ns});
  f.push_back({"clock_ghz", "GHz", &per.clock_ghz});

  auto& o = p.options;
  f.push_back({"sim.pipelined_reduction", "true|false", &o.pipelined_reduction});
  f.push_back({"sim.reduction_lanes", "psum adders in the reduction fabric", &o.reduction_lanes});
  f.push_back({"sim.laser_power_mw_per_wavelength", "mW", &o.laser_power_mw_per_wavelength});
  f.push_back({"sim.wall_plug_efficiency", "fraction", &o.wall_plug_efficiency});
  f.push_back({"sim.edram_width_bits", "bits per transaction", &o.edram_width_bits});
  f.push_back({"sim.unit_vector_width", "elements per pool/activation op", &o.unit_vector_width});
  f.push_back({"sim.weight_tuning", "eo|to", &o.weight_tuning});
  f.push_back({"sim.overlap_weight_load", "true|false", &o.overlap_weight_load});
  f.push_back({"sim.mrr_area_mm2", "mm^2 per ring", &o.mrr_area_mm2});
  f.push_back({"sim.waveguide_pitch_mm", "mm", &o.waveguide_pitch_mm});
  f.push_back({"sim.routing_overhead", "x", &o.routing_overhead});
  f.push_back({"sim.d_mrr_mm", "mm", &o.d_mrr_mm});
  f.push_back({"hw_bits", "bits per DPE operand", &p.hw_bits});
  f.push_back({"dpus_per_tile", "DPUs", &p.dpus_per_tile});
  return f;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

struct Assign {
  std::string_view text;

  bool operator()(double* v) const { return parse_number(text, *v); }
  bool operator()(std::int64_t* v) const { return parse_number(text, *v); }
  bool operator()(int* v) const { return parse_number(text, *v); }
  bool operator()(bool* v) const {
    if (text == "true" || text == "1") return *v = true, true;
    if (text == "false" || text == "0") return *v = false, true;
    return false;
  }
  bool operator()(WeightTuning* v) const {
    if (text == "eo") return *v = WeightTuning::kElectroOptic, true;
    if (text == "to") return *v = WeightTuning::kThermoOptic, true;
    return false;
  }
};

std::string format(const Slot& slot) {
  struct {
    std::string operator()(const double* v) const {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.9g", *v);
      return buf;
    }
    std::string operator()(const std::int64_t* v) const { return std::to_string(*v); }
    std::string operator()(const int* v) const { return std::to_string(*v); }
    std::string operator()(const bool* v) const { return *v ? "true" : "false"; }
    std::string operator()(const WeightTuning* v) const {
      return *v == WeightTuning::kElectroOptic ? "eo" : "to";
    }
  } visitor;
  return std::visit(visitor, slot);
}

}  // namespace

void ParamSet::validate() const {
  link.validate();
  peripherals.validate();
  options.validate();
  if (hw_bits < 1 || hw_bits > 16) throw InvalidArgument("hw_bits must be in [1, 16]");
  if (dpus_per_tile < 1) throw InvalidArgument("dpus_per_tile must be >= 1");
  if (spectral.fsr_nm <= 0.0 || spectral.channel_spacing_nm <= 0.0) {
    throw InvalidArgument("FSR and channel spacing must be positive");
  }
}

ParamSet parse_params(std::istream& in, const std::string& source) {
  ParamSet params;
  auto table = fields(params);
  std::set<std::string, std::less<>> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, line_no, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    auto it = std::find_if(table.begin(), table.end(),
                           [key](const Field& f) { return f.key == key; });
    if (it == table.end()) {
      throw ParseError(source, line_no, "unknown key '" + std::string(key) + "'");
    }
    if (!seen.emplace(key).second) {
      throw ParseError(source, line_no, "duplicate key '" + std::string(key) + "'");
    }
    if (!std::visit(Assign{value}, it->slot)) {
      throw ParseError(source, line_no,
                       "bad value '" + std::string(value) + "' for '" + std::string(key) + "'");
    }
  }
  try {
    params.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(source, 0, e.what());
  }
  return params;
}

ParamSet load_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open parameter file");
  return parse_params(in, path.string());
}

void write_params(std::ostream& out, const ParamSet& params) {
  ParamSet copy = params;
  out << "# photonic-dse parameters\n";
  for (const auto& f : fields(copy)) {
    out << f.key << " = " << format(f.slot) << "  # " << f.unit << '\n';
  }
}

}  // namespace pdse
