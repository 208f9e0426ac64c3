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

#ifndef UAVNOMA_CONFIG_IO_HPP
#define UAVNOMA_CONFIG_IO_HPP

// Scenario configuration files: UTF-8 text, one `key = value` per line,
// `#` starts a comment. Keys are the ScenarioConfig field names; unknown or
// repeated keys are errors. Missing keys keep their defaults.
//
// Requires linking Boost.program_options.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include <boost/program_options.hpp>

#include "uavnoma/scenario.hpp"

namespace uavnoma {

/// Shortest decimal text that round-trips `v` ('.' decimal separator,
/// independent of the locale).
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, res.ptr);
}

inline ScenarioConfig parse_config(std::istream& in, const std::string& source = "<config>") {
  namespace po = boost::program_options;
  ScenarioConfig cfg;
  std::string region = std::string(to_string(cfg.placement_region));
  po::options_description desc;
  // clang-format off
  desc.add_options()
      ("region_radius", po::value(&cfg.region_radius))
      ("tbs_coverage_radius", po::value(&cfg.tbs_coverage_radius))
      ("uav_height", po::value(&cfg.uav_height))
      ("num_sectors", po::value(&cfg.num_sectors))
      ("slots_per_frame", po::value(&cfg.slots_per_frame))
      ("num_devices", po::value(&cfg.num_devices))
      ("revolution_period", po::value(&cfg.revolution_period))
      ("beta0", po::value(&cfg.beta0))
      ("noise_power", po::value(&cfg.noise_power))
      ("p_u_max", po::value(&cfg.p_u_max))
      ("eta_sic_db", po::value(&cfg.eta_sic_db))
      ("p_su", po::value(&cfg.p_su))
      ("p_au", po::value(&cfg.p_au))
      ("seed", po::value(&cfg.seed))
      ("placement_region", po::value(&region));
  // clang-format on
  try {
    po::variables_map vm;
    po::store(po::parse_config_file(in, desc, /*allow_unregistered=*/false), vm);
    po::notify(vm);
  } catch (const po::error& e) {
    throw std::invalid_argument(source + ": " + e.what());
  }
  cfg.placement_region = parse_placement_region(region);
  cfg.validate();
  return cfg;
}

inline ScenarioConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

inline ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  return parse_config(in, path.string());
}

inline std::string config_to_text(const ScenarioConfig& c) {
  std::ostringstream o;
  o << "region_radius = " << format_double(c.region_radius) << '\n'
    << "tbs_coverage_radius = " << format_double(c.tbs_coverage_radius) << '\n'
    << "uav_height = " << format_double(c.uav_height) << '\n'
    << "num_sectors = " << c.num_sectors << '\n'
    << "slots_per_frame = " << c.slots_per_frame << '\n'
    << "num_devices = " << c.num_devices << '\n'
    << "revolution_period = " << format_double(c.revolution_period) << '\n'
    << "beta0 = " << format_double(c.beta0) << '\n'
    << "noise_power = " << format_double(c.noise_power) << '\n'
    << "p_u_max = " << format_double(c.p_u_max) << '\n'
    << "eta_sic_db = " << format_double(c.eta_sic_db) << '\n'
    << "p_su = " << format_double(c.p_su) << '\n'
    << "p_au = " << format_double(c.p_au) << '\n'
    << "seed = " << c.seed << '\n'
    << "placement_region = " << to_string(c.placement_region) << '\n';
  return o.str();
}

}  // namespace uavnoma

#endif  // UAVNOMA_CONFIG_IO_HPP
