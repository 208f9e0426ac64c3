// Copyright 2026 The uavnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// uavnoma: command-line driver.
//
//   uavnoma run     [--config F] [--scheme S]   -> run_summary.csv, run_sectors.csv, deployment.csv
//   uavnoma sweep    --spec F.json              -> sweep_results.csv
//   uavnoma compare [--config F] [--trials N]   -> compare_results.csv
//   uavnoma trace   [--config F]                -> convergence_trace.csv
//
// Common flags: --out DIR, --format csv|json, --seed U64 (overrides the
// config seed or sweep seed base), --threads N (never changes results).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uavnoma/config_io.hpp"
#include "uavnoma/experiment.hpp"
#include "uavnoma/report_io.hpp"

namespace fs = std::filesystem;
using namespace uavnoma;

namespace {

struct Common {
  std::string config;
  std::string out = ".";
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_config = true) {
  if (with_config)
    cmd->add_option("--config", c.config, "Scenario config file (key = value)")->check(CLI::ExistingFile);
  cmd->add_option("--out", c.out, "Output directory")->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "Seed (overrides the config)");
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

ScenarioConfig scenario_from(const Common& c) {
  ScenarioConfig cfg = c.config.empty() ? ScenarioConfig{} : load_config(c.config);
  if (c.seed) cfg.seed = *c.seed;
  cfg.validate();
  return cfg;
}

std::ofstream open_out(const Common& c, const std::string& name) {
  fs::create_directories(c.out);
  const fs::path p = fs::path(c.out) / name;
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  std::cerr << "writing " << p.string() << '\n';
  return f;
}

void emit_json(const Common& c, const std::string& name, const nlohmann::ordered_json& j) {
  open_out(c, name) << j.dump(2) << '\n';
}

void warn_nonconverged(const RunResult& r) {
  if (r.nonconverged_solves > 0)
    std::cerr << "warning: " << r.nonconverged_solves << " of " << r.solves
              << " power-control solves hit the iteration limit\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-tier multi-UAV NOMA uplink simulator"};
  app.require_subcommand(1);

  Common run_c, sweep_c, cmp_c, trace_c;
  std::string scheme_name = "noma_optimal_placement";
  std::string spec_path;
  int trials = 100;

  auto* run = app.add_subcommand("run", "Single scenario report");
  add_common(run, run_c);
  run->add_option("--scheme", scheme_name, "noma_optimal_placement | noma_random_placement | oma_tdma")
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Monte-Carlo parameter sweep");
  add_common(sweep, sweep_c, false);
  sweep->add_option("--spec", spec_path, "Sweep specification (JSON)")->required()->check(CLI::ExistingFile);

  auto* cmp = app.add_subcommand("compare", "All schemes on common seeds");
  add_common(cmp, cmp_c);
  cmp->add_option("--trials", trials, "Monte-Carlo trials")->check(CLI::Range(2, 1000000))->capture_default_str();

  auto* trace = app.add_subcommand("trace", "Convergence trace of one run");
  add_common(trace, trace_c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const RunResult r = run_single(scenario_from(run_c), parse_scheme(scheme_name),
                                     RunOptions{.solver = {}, .threads = run_c.threads});
      warn_nonconverged(r);
      if (run_c.format == "json") {
        emit_json(run_c, "run_report.json", run_to_json(r));
      } else {
        auto s = open_out(run_c, "run_summary.csv");
        write_run_summary_csv(s, r);
        auto t = open_out(run_c, "run_sectors.csv");
        write_run_sectors_csv(t, r);
      }
      auto d = open_out(run_c, "deployment.csv");
      write_deployment_csv(d, r);
      std::cout << "system_sum_rate " << format_double(r.report.system_sum_rate) << '\n';
    } else if (*sweep) {
      SweepSpec spec = load_sweep_spec(spec_path);
      if (sweep_c.seed) spec.base.seed = *sweep_c.seed;
      const SweepResult res = run_sweep(spec, sweep_c.threads);
      if (sweep_c.format == "json") {
        emit_json(sweep_c, "sweep_results.json", rows_to_json(res.rows));
      } else {
        auto f = open_out(sweep_c, "sweep_results.csv");
        write_rows_csv(f, res.rows);
      }
    } else if (*cmp) {
      const SweepResult res = compare_schemes(scenario_from(cmp_c), trials, cmp_c.threads);
      if (cmp_c.format == "json") {
        emit_json(cmp_c, "compare_results.json", rows_to_json(res.rows));
      } else {
        auto f = open_out(cmp_c, "compare_results.csv");
        write_rows_csv(f, res.rows);
      }
    } else if (*trace) {
      const RunResult r = run_single(scenario_from(trace_c), Scheme::noma_optimal_placement,
                                     RunOptions{.solver = {}, .threads = trace_c.threads});
      warn_nonconverged(r);
      if (trace_c.format == "json") {
        emit_json(trace_c, "convergence_trace.json", trace_to_json(r));
      } else {
        auto f = open_out(trace_c, "convergence_trace.csv");
        write_trace_csv(f, r);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
