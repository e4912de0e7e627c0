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

// photonic-dse: command-line front end.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "pdse/area_model.hpp"
#include "pdse/compare.hpp"
#include "pdse/csv_report.hpp"
#include "pdse/errors.hpp"
#include "pdse/mapper.hpp"
#include "pdse/params_file.hpp"
#include "pdse/workload.hpp"

namespace fs = std::filesystem;
using namespace pdse;

namespace {

enum ExitCode { kOk = 0, kInputError = 2, kConfigError = 3, kInternalError = 4 };

struct Options {
  std::string params_path;
  std::vector<std::string> model_paths;
  std::vector<std::string> orgs;
  std::vector<double> drs{1.0, 5.0, 10.0};
  std::vector<int> bits{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<std::int64_t> ns{36};
  std::string out = "-";
  std::string breakdown_out;
  std::string config_out;
  bool paper_counts = false;
  bool serial_reduction = false;
  std::int64_t fixed_n = 0;
  int model_bits = 0;
};

ParamSet load_param_set(const Options& o) {
  return o.params_path.empty() ? ParamSet{} : load_params(o.params_path);
}

std::vector<DpuOrganization> organizations(const Options& o) {
  if (o.orgs.empty()) return {kAllOrganizations.begin(), kAllOrganizations.end()};
  std::vector<DpuOrganization> out;
  for (const auto& name : o.orgs) out.push_back(parse_organization(name));
  return out;
}

std::vector<CnnModel> models(const Options& o) {
  std::vector<fs::path> paths(o.model_paths.begin(), o.model_paths.end());
  if (paths.empty()) {
    for (const auto& entry : fs::directory_iterator(PDSE_MODEL_DIR)) {
      if (entry.path().extension() == ".csv") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
  }
  std::vector<CnnModel> out;
  for (const auto& p : paths) {
    auto m = load_model(p);
    if (o.model_bits > 0) {
      for (auto& layer : m.layers) layer.model_bits = o.model_bits;
    }
    out.push_back(std::move(m));
  }
  return out;
}

DesignSpace design_space(const Options& o) {
  DesignSpace s;
  s.params = load_param_set(o);
  if (o.serial_reduction) s.params.options.pipelined_reduction = false;
  s.paper_counts = o.paper_counts;
  s.fixed_n = o.fixed_n;
  return s;
}

void echo_configs(const Options& o, const DesignSpace& space,
                  const std::vector<DpuOrganization>& orgs) {
  if (o.config_out.empty()) return;
  std::vector<AcceleratorConfig> configs;
  for (auto org : orgs) {
    for (double dr : o.drs) configs.push_back(design_point(space, org, dr));
  }
  write_atomically(o.config_out, [&](std::ostream& out) { write_config_csv(out, configs); });
}

void cmd_scalability(const Options& o) {
  const auto p = load_param_set(o);
  const auto orgs = organizations(o);
  const auto rows = sweep_scalability(o.bits, o.drs, orgs, p.link, p.penalties, p.spectral);
  write_atomically(o.out, [&](std::ostream& out) { write_scalability_csv(out, rows); });
}

void cmd_penalty(const Options& o) {
  const auto p = load_param_set(o);
  LossModelParams loss{p.link.p_mrm_obl_db, p.link.d_mrr_mm, p.link.p_si_att_db_per_mm,
                       p.options.routing_overhead, p.penalties};
  std::vector<PenaltyRow> rows;
  for (auto org : organizations(o)) {
    for (auto n : o.ns) {
      rows.push_back({org, n, crosstalk_profile(org), loss_profile(org, n, loss)});
    }
  }
  write_atomically(o.out, [&](std::ostream& out) { write_penalty_csv(out, rows); });
}

void cmd_simulate(const Options& o) {
  const auto space = design_space(o);
  const auto orgs = organizations(o);
  const auto ms = models(o);
  echo_configs(o, space, orgs);
  const auto reports = simulate_sweep(ms, orgs, o.drs, space);
  write_atomically(o.out, [&](std::ostream& out) { write_report_csv(out, reports); });
  if (!o.breakdown_out.empty()) {
    write_atomically(o.breakdown_out,
                     [&](std::ostream& out) { write_breakdown_csv(out, reports); });
  }
}

void cmd_compare(const Options& o) {
  const auto space = design_space(o);
  const auto orgs = organizations(o);
  const auto ms = models(o);
  echo_configs(o, space, orgs);
  const auto rows = compare_accelerators(ms, orgs, o.drs, space);
  write_atomically(o.out, [&](std::ostream& out) { write_compare_csv(out, rows); });
}

void cmd_plan(const Options& o) {
  const auto space = design_space(o);
  const auto orgs = organizations(o);
  if (orgs.size() != 1 || o.drs.size() != 1) {
    throw InvalidArgument("plan takes exactly one --org and one --dr");
  }
  const auto config = design_point(space, orgs.front(), o.drs.front());
  const auto ms = models(o);
  write_atomically(o.out, [&](std::ostream& out) {
    for (const auto& m : ms) write_plan_csv(out, plan_model(m, config).layers);
  });
}

void cmd_seed_params(const Options& o) {
  write_atomically(o.out, [](std::ostream& out) { write_params(out, ParamSet{}); });
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--params", o.params_path, "Parameter file (key = value)");
  cmd->add_option("--out", o.out, "Output CSV, - for stdout");
}

void add_sweep(CLI::App* cmd, Options& o) {
  cmd->add_option("--org", o.orgs, "Organizations: asmw,masw,smwa")->delimiter(',');
  cmd->add_option("--dr", o.drs, "Datarates in GS/s")->delimiter(',');
}

void add_sim(CLI::App* cmd, Options& o) {
  add_sweep(cmd, o);
  cmd->add_option("--model", o.model_paths, "CNN descriptor CSV (repeatable)");
  cmd->add_flag("--paper-counts", o.paper_counts, "Use the reference-table N and DPU counts");
  cmd->add_flag("--serial-reduction", o.serial_reduction, "Unpipelined psum reduction");
  cmd->add_option("--n", o.fixed_n, "Force N = M")->check(CLI::PositiveNumber);
  cmd->add_option("--model-bits", o.model_bits, "Override operand precision of every layer")
      ->check(CLI::Range(1, 16));
  cmd->add_option("--config-out", o.config_out, "Write the resolved design points here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design-space exploration for MRR photonic GEMM accelerators"};
  app.require_subcommand(0, 1);
  Options o;
  bool seed_flag = false;
  app.add_flag("--seed-params", seed_flag, "Print the default parameter file");

  auto* scal = app.add_subcommand("scalability", "Achievable N per organization");
  add_common(scal, o);
  add_sweep(scal, o);
  scal->add_option("--b", o.bits, "Bit precisions")->delimiter(',');

  auto* pen = app.add_subcommand("penalty", "Crosstalk flags and losses");
  add_common(pen, o);
  pen->add_option("--org", o.orgs, "Organizations")->delimiter(',');
  pen->add_option("--n", o.ns, "DPE sizes")->delimiter(',');

  auto* sim = app.add_subcommand("simulate", "Simulate inference");
  add_common(sim, o);
  add_sim(sim, o);
  sim->add_option("--breakdown", o.breakdown_out, "Per-component energy CSV");

  auto* cmp = app.add_subcommand("compare", "Normalized comparison with gmean rows");
  add_common(cmp, o);
  add_sim(cmp, o);

  auto* plan = app.add_subcommand("plan", "Per-layer mapping dump");
  add_common(plan, o);
  add_sim(plan, o);

  auto* seed = app.add_subcommand("seed-params", "Print the default parameter file");
  seed->add_option("--out", o.out, "Output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (seed_flag || seed->parsed()) {
      cmd_seed_params(o);
    } else if (scal->parsed()) {
      cmd_scalability(o);
    } else if (pen->parsed()) {
      cmd_penalty(o);
    } else if (sim->parsed()) {
      cmd_simulate(o);
    } else if (cmp->parsed()) {
      cmd_compare(o);
    } else if (plan->parsed()) {
      cmd_plan(o);
    } else {
      std::cerr << app.help();
      return kInputError;
    }
  } catch (const ParseError& e) {
    std::cerr << "photonic-dse: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidArgument& e) {
    std::cerr << "photonic-dse: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "photonic-dse: " << e.what() << '\n';
    return kInputError;
  } catch (const ConfigError& e) {
    std::cerr << "photonic-dse: configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InfeasiblePrecision& e) {
    std::cerr << "photonic-dse: configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvariantViolation& e) {
    std::cerr << "photonic-dse: internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "photonic-dse: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}
