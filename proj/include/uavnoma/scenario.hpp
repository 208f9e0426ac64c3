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

#ifndef UAVNOMA_SCENARIO_HPP
#define UAVNOMA_SCENARIO_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uavnoma/rng.hpp"
#include "uavnoma/types.hpp"

namespace uavnoma {

enum class PlacementRegion { annulus, disk };

inline std::string_view to_string(PlacementRegion r) {
  return r == PlacementRegion::annulus ? "annulus" : "disk";
}

inline PlacementRegion parse_placement_region(std::string_view s) {
  if (s == "annulus") return PlacementRegion::annulus;
  if (s == "disk") return PlacementRegion::disk;
  throw std::invalid_argument("placement_region must be 'annulus' or 'disk', got '" +
                              std::string(s) + "'");
}

/// Physical and protocol constants of one scenario. Lengths in meters,
/// powers in watts, time in seconds.
struct ScenarioConfig {
  double region_radius = 500.0;
  double tbs_coverage_radius = 300.0;  // r0, also the anchor UAV orbit radius
  double uav_height = 100.0;
  int num_sectors = 10;                // M
  int slots_per_frame = 8;             // L
  int num_devices = 100;               // N
  double revolution_period = 80.0;     // T
  double beta0 = 1e-3;
  double noise_power = 1e-12;          // N0
  double p_u_max = 0.5;
  double eta_sic_db = 5.0;
  double p_su = 1.0;
  double p_au = 1.0;
  std::uint64_t seed = 1;
  PlacementRegion placement_region = PlacementRegion::annulus;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const {
    auto require = [](bool ok, const char* what) {
      if (!ok) throw std::invalid_argument(std::string("invalid scenario: ") + what);
    };
    auto finite_pos = [](double v) { return std::isfinite(v) && v > 0.0; };
    require(finite_pos(region_radius), "region_radius must be > 0");
    require(finite_pos(tbs_coverage_radius), "tbs_coverage_radius must be > 0");
    require(tbs_coverage_radius < region_radius,
            "tbs_coverage_radius must be < region_radius");
    require(finite_pos(uav_height), "uav_height must be > 0");
    require(num_sectors >= 2, "num_sectors must be >= 2");
    require(slots_per_frame >= 1, "slots_per_frame must be >= 1");
    require(num_devices >= 0, "num_devices must be >= 0");
    require(finite_pos(revolution_period), "revolution_period must be > 0");
    require(finite_pos(beta0), "beta0 must be > 0");
    require(finite_pos(noise_power), "noise_power must be > 0");
    require(finite_pos(p_u_max), "p_u_max must be > 0");
    require(std::isfinite(eta_sic_db), "eta_sic_db must be finite");
    require(finite_pos(p_su), "p_su must be > 0");
    require(finite_pos(p_au), "p_au must be > 0");
  }
};

// ---------------------------------------------------------------------------
// Cyclical TDMA time grid
// ---------------------------------------------------------------------------

/// Slots [begin, end) of one relay frame (0-based slot indices).
struct Frame {
  int begin = 0;
  int end = 0;

  bool contains(int slot) const { return slot >= begin && slot < end; }
  int size() const { return end - begin; }
};

/// One revolution of the anchor UAV: K = M*L slots grouped into M frames;
/// frame j is reserved for relaying sector j.
struct TimeGrid {
  int num_slots = 0;       // K
  int slots_per_frame = 0; // L
  double slot_duration = 0.0;
  std::vector<Frame> frames;
  double prelog = 0.0;     // m = (M-1)/M

  int num_frames() const { return static_cast<int>(frames.size()); }
  int frame_of_slot(int slot) const { return slot / slots_per_frame; }
  /// Slots during which sector j's devices may transmit.
  int active_slots_per_sector() const { return num_slots - slots_per_frame; }
};

inline TimeGrid build_time_grid(const ScenarioConfig& cfg) {
  const int m = cfg.num_sectors;
  const int l = cfg.slots_per_frame;
  if (m < 2 || l < 1) throw std::invalid_argument("time grid needs M >= 2, L >= 1");
  TimeGrid g;
  g.num_slots = m * l;
  g.slots_per_frame = l;
  g.slot_duration = cfg.revolution_period / g.num_slots;
  g.frames.reserve(m);
  for (int j = 0; j < m; ++j) g.frames.push_back({j * l, (j + 1) * l});
  g.prelog = static_cast<double>(m - 1) / m;
  return g;
}

// ---------------------------------------------------------------------------
// Device deployment and sectorization
// ---------------------------------------------------------------------------

/// Uniform points over the annulus [r0, R] (or the full disk), via inverse-CDF
/// radius sampling. Draws radius then angle for each device, in order.
inline std::vector<Point2> generate_devices(const ScenarioConfig& cfg, Rng& rng) {
  const double outer2 = cfg.region_radius * cfg.region_radius;
  const double inner2 = cfg.placement_region == PlacementRegion::annulus
                            ? cfg.tbs_coverage_radius * cfg.tbs_coverage_radius
                            : 0.0;
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(cfg.num_devices));
  for (int i = 0; i < cfg.num_devices; ++i) {
    double r = std::sqrt(rng.uniform01() * (outer2 - inner2) + inner2);
    // Guard the rounding edge of sqrt at the inner radius.
    if (cfg.placement_region == PlacementRegion::annulus && r < cfg.tbs_coverage_radius)
      r = cfg.tbs_coverage_radius;
    const double theta = kTwoPi * rng.uniform01();
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return pts;
}

/// Lower angular boundary of wedge j (0-based) out of m.
inline double sector_lower_angle(int j, int m) { return kTwoPi * j / m; }

/// Wedge index of a polar angle in [0, 2*pi); wedges are half-open
/// [2*pi*j/M, 2*pi*(j+1)/M).
inline int sector_of_angle(double theta, int m) {
  int j = static_cast<int>(std::floor(theta * m / kTwoPi));
  if (j < 0) j = 0;
  if (j >= m) j = m - 1;
  // Snap against the boundaries as computed by sector_lower_angle.
  while (j + 1 < m && theta >= sector_lower_angle(j + 1, m)) ++j;
  while (j > 0 && theta < sector_lower_angle(j, m)) --j;
  return j;
}

inline constexpr int kTbsDirect = -1;

struct SectorAssignment {
  /// Sector index per device, or kTbsDirect.
  std::vector<int> sector_of_device;
  /// S_j: device indices per sector, ascending.
  std::vector<std::vector<std::size_t>> devices_of_sector;
  /// Devices inside the TBS coverage disk; served directly, not via NOMA.
  std::vector<std::size_t> tbs_direct;
};

inline SectorAssignment sectorize(const std::vector<Point2>& devices, int m,
                                  double tbs_radius = 0.0) {
  if (m < 2) throw std::invalid_argument("sectorize: M must be >= 2");
  SectorAssignment a;
  a.sector_of_device.resize(devices.size());
  a.devices_of_sector.resize(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < devices.size(); ++i) {
    const Point2& p = devices[i];
    // The coverage circle itself belongs to the annulus; the relative slack
    // absorbs cos/sin rounding of points sampled exactly at r0.
    if (tbs_radius > 0.0 && p.norm() < tbs_radius * (1.0 - 1e-12)) {
      a.sector_of_device[i] = kTbsDirect;
      a.tbs_direct.push_back(i);
      continue;
    }
    const int j = sector_of_angle(polar_angle(p), m);
    a.sector_of_device[i] = j;
    a.devices_of_sector[static_cast<std::size_t>(j)].push_back(i);
  }
  return a;
}

}  // namespace uavnoma

#endif  // UAVNOMA_SCENARIO_HPP
