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

#ifndef UAVNOMA_REPORT_IO_HPP
#define UAVNOMA_REPORT_IO_HPP

// CSV and JSON emission, and sweep specification files.
//
// CSV files start with a comment line `#schema=1 ...` describing units and
// definitions, followed by a header row. Numbers use the shortest
// round-trip representation with '.' as decimal separator; rows end in '\n'.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "uavnoma/config_io.hpp"
#include "uavnoma/experiment.hpp"

namespace uavnoma {

inline constexpr int kCsvSchemaVersion = 1;

inline std::string schema_line(const std::string& notes) {
  return "#schema=" + std::to_string(kCsvSchemaVersion) + " " + notes + "\n";
}

// Result rows ----------------------------------------------------------------

inline void write_rows_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << schema_line(
      "rates=bit/s/Hz ci95=1.96*sd/sqrt(trials) served=devices with nonzero cycle energy "
      "violation=fraction of sectors breaking a relay capacity assumption");
  out << "scheme,swept_parameter,swept_value,mean_sum_rate,ci95_halfwidth,"
         "mean_served_fraction,feasibility_violation_rate,trials,seed_base\n";
  for (const auto& r : rows) {
    out << to_string(r.scheme) << ',' << to_string(r.parameter) << ','
        << format_double(r.swept_value) << ',' << format_double(r.mean_sum_rate) << ','
        << format_double(r.ci95_halfwidth) << ',' << format_double(r.mean_served_fraction) << ','
        << format_double(r.feasibility_violation_rate) << ',' << r.trials << ',' << r.seed_base
        << '\n';
  }
}

inline nlohmann::ordered_json rows_to_json(const std::vector<ResultRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"scheme", to_string(r.scheme)},
                   {"swept_parameter", to_string(r.parameter)},
                   {"swept_value", r.swept_value},
                   {"mean_sum_rate", r.mean_sum_rate},
                   {"ci95_halfwidth", r.ci95_halfwidth},
                   {"mean_served_fraction", r.mean_served_fraction},
                   {"feasibility_violation_rate", r.feasibility_violation_rate},
                   {"trials", r.trials},
                   {"seed_base", r.seed_base}});
  }
  return {{"schema", kCsvSchemaVersion}, {"rows", arr}};
}

// Single run -----------------------------------------------------------------

inline void write_run_summary_csv(std::ostream& out, const RunResult& r) {
  out << schema_line("single run summary; rates=bit/s/Hz");
  out << "key,value\n";
  out << "scheme," << to_string(r.scheme) << '\n';
  out << "seed," << r.config.seed << '\n';
  out << "num_devices," << r.config.num_devices << '\n';
  out << "num_sectors," << r.config.num_sectors << '\n';
  out << "tbs_direct_devices," << r.deployment.sectors.tbs_direct.size() << '\n';
  out << "system_sum_rate," << format_double(r.report.system_sum_rate) << '\n';
  out << "system_sum_rate_slot_major," << format_double(r.report.system_sum_rate_slot_major)
      << '\n';
  out << "served_fraction," << format_double(r.report.served_fraction) << '\n';
  out << "relay_violations," << r.report.relay_violations() << '\n';
  out << "solves," << r.solves << '\n';
  out << "nonconverged_solves," << r.nonconverged_solves << '\n';
  out << "infeasible_denominator_events," << r.infeasible_denominator_events << '\n';
}

inline void write_run_sectors_csv(std::ostream& out, const RunResult& r) {
  out << schema_line("per-sector results; rates=bit/s/Hz data=bit/Hz capacities=min over frame");
  out << "sector,num_devices,su_x,su_y,relay_rate,data_volume,min_c_au_su,min_c_au_tbs,"
         "tbs_covers_su,su_covers_rate\n";
  const auto& rep = r.report;
  for (std::size_t j = 0; j < rep.sector_relay_rate.size(); ++j) {
    const auto& cap = rep.capacities[j];
    const Frame& f = r.grid.frames[j];
    double min_su = cap.au_su.empty() ? 0.0 : *std::min_element(cap.au_su.begin(), cap.au_su.end());
    double min_tbs = cap.au_tbs.at(static_cast<std::size_t>(f.begin));
    for (int k = f.begin; k < f.end; ++k)
      min_tbs = std::min(min_tbs, cap.au_tbs[static_cast<std::size_t>(k)]);
    out << j << ',' << r.deployment.sectors.devices_of_sector[j].size() << ','
        << format_double(r.deployment.su_positions[j].x) << ','
        << format_double(r.deployment.su_positions[j].y) << ','
        << format_double(rep.sector_relay_rate[j]) << ',' << format_double(rep.sector_data[j])
        << ',' << format_double(min_su) << ',' << format_double(min_tbs) << ','
        << (rep.feasibility[j].tbs_covers_su ? 1 : 0) << ','
        << (rep.feasibility[j].su_covers_rate ? 1 : 0) << '\n';
  }
}

/// Devices, sector UAVs and anchor UAV waypoints for plotting the layout.
inline void write_deployment_csv(std::ostream& out, const RunResult& r) {
  out << schema_line("layout; meters; sector=-1 for TBS-direct devices and anchor waypoints");
  out << "kind,index,sector,x,y,z\n";
  const auto& d = r.deployment;
  for (std::size_t i = 0; i < d.devices.size(); ++i)
    out << "device," << i << ',' << d.sectors.sector_of_device[i] << ','
        << format_double(d.devices[i].x) << ',' << format_double(d.devices[i].y) << ",0\n";
  for (std::size_t j = 0; j < d.su_positions.size(); ++j)
    out << "su," << j << ',' << j << ',' << format_double(d.su_positions[j].x) << ','
        << format_double(d.su_positions[j].y) << ',' << format_double(d.height) << '\n';
  for (std::size_t k = 0; k < d.au_positions.size(); ++k)
    out << "au," << k << ",-1," << format_double(d.au_positions[k].x) << ','
        << format_double(d.au_positions[k].y) << ',' << format_double(d.au_positions[k].z)
        << '\n';
}

inline void write_trace_csv(std::ostream& out, const RunResult& r) {
  out << schema_line("convergence; system_sum_rate after n solver iterations, bit/s/Hz");
  out << "iteration,system_sum_rate\n";
  for (std::size_t n = 0; n < r.convergence_trace.size(); ++n)
    out << (n + 1) << ',' << format_double(r.convergence_trace[n]) << '\n';
}

inline nlohmann::ordered_json run_to_json(const RunResult& r) {
  using nlohmann::ordered_json;
  const auto& rep = r.report;
  ordered_json sectors = ordered_json::array();
  for (std::size_t j = 0; j < rep.sector_relay_rate.size(); ++j) {
    sectors.push_back({{"sector", j},
                       {"num_devices", r.deployment.sectors.devices_of_sector[j].size()},
                       {"su", {r.deployment.su_positions[j].x, r.deployment.su_positions[j].y}},
                       {"relay_rate", rep.sector_relay_rate[j]},
                       {"data_volume", rep.sector_data[j]},
                       {"c_au_su", rep.capacities[j].au_su},
                       {"tbs_covers_su", rep.feasibility[j].tbs_covers_su},
                       {"su_covers_rate", rep.feasibility[j].su_covers_rate}});
  }
  return {{"schema", kCsvSchemaVersion},
          {"scheme", to_string(r.scheme)},
          {"seed", r.config.seed},
          {"system_sum_rate", rep.system_sum_rate},
          {"system_sum_rate_slot_major", rep.system_sum_rate_slot_major},
          {"served_fraction", rep.served_fraction},
          {"relay_violations", rep.relay_violations()},
          {"solves", r.solves},
          {"nonconverged_solves", r.nonconverged_solves},
          {"infeasible_denominator_events", r.infeasible_denominator_events},
          {"sectors", sectors}};
}

inline nlohmann::ordered_json trace_to_json(const RunResult& r) {
  return {{"schema", kCsvSchemaVersion}, {"system_sum_rate", r.convergence_trace}};
}

// Sweep specification files --------------------------------------------------

/// JSON sweep file:
///   {
///     "swept_parameter": "num_devices" | "num_sectors" | "p_u_max",
///     "values": [40, 60, ...],
///     "trials": 100,
///     "schemes": ["noma_optimal_placement", ...],
///     "base_config": { <config keys> }      (optional)
///     "base_config_file": "base.cfg"        (optional, relative to the file)
///   }
inline SweepSpec parse_sweep_spec(const nlohmann::json& j,
                                  const std::filesystem::path& base_dir = {}) {
  static const std::set<std::string> known{"swept_parameter", "values", "trials", "schemes",
                                           "base_config", "base_config_file"};
  if (!j.is_object()) throw std::invalid_argument("sweep spec must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw std::invalid_argument("sweep spec: unknown key '" + key + "'");
  if (j.contains("base_config") && j.contains("base_config_file"))
    throw std::invalid_argument("sweep spec: give base_config or base_config_file, not both");

  SweepSpec s;
  s.parameter = parse_swept_parameter(j.at("swept_parameter").get<std::string>());
  s.values = j.at("values").get<std::vector<double>>();
  if (j.contains("trials")) s.trials = j.at("trials").get<int>();
  if (j.contains("schemes")) {
    s.schemes.clear();
    for (const auto& name : j.at("schemes")) s.schemes.push_back(parse_scheme(name.get<std::string>()));
  }
  if (j.contains("base_config")) {
    std::ostringstream text;
    for (const auto& [key, v] : j.at("base_config").items()) {
      text << key << " = ";
      if (v.is_string())
        text << v.get<std::string>();
      else if (v.is_number_float())
        text << format_double(v.get<double>());
      else
        text << v.dump();
      text << '\n';
    }
    std::istringstream in(text.str());
    s.base = parse_config(in, "base_config");
  } else if (j.contains("base_config_file")) {
    s.base = load_config(base_dir / j.at("base_config_file").get<std::string>());
  }
  s.validate();
  return s;
}

inline SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sweep spec " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return parse_sweep_spec(j, path.parent_path());
}

}  // namespace uavnoma

#endif  // UAVNOMA_REPORT_IO_HPP
