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

#ifndef UAVNOMA_CHANNEL_HPP
#define UAVNOMA_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavnoma/scenario.hpp"
#include "uavnoma/types.hpp"

namespace uavnoma {

/// Lower bound on the anchor-to-sector UAV horizontal distance, in meters.
/// Both UAVs fly at the same height, so an SU on the anchor orbit would
/// otherwise produce an infinite gain.
inline constexpr double kMinAuSuDistance = 1.0;

enum class Link { iot_su, au_su, au_tbs };

/// Fading magnitude |h| supplier: (link, sector, device, slot) -> |h|.
/// `device` is the device index for iot_su links and unused otherwise;
/// `sector` is unused for au_tbs links.
using FadingFn = std::function<double(Link, int sector, std::size_t device, int slot)>;

/// Line-of-sight default: |h| = 1 on every link.
inline double unit_fading(Link, int, std::size_t, int) { return 1.0; }

// Anchor UAV orbit ---------------------------------------------------------

/// Orbit point for any integer slot index; periodic in K.
inline Point3 orbit_position(long long slot, int num_slots, double r0, double h) {
  const double phase = kTwoPi * static_cast<double>(slot % num_slots) / num_slots;
  return {r0 * std::cos(phase), r0 * std::sin(phase), h};
}

/// Anchor UAV position during slot k (0-based, k in [0, K)).
inline Point3 au_position(int slot, int num_slots, double r0, double h) {
  if (num_slots <= 0 || slot < 0 || slot >= num_slots)
    throw std::out_of_range("au_position: slot " + std::to_string(slot) +
                            " outside [0, " + std::to_string(num_slots) + ")");
  return orbit_position(slot, num_slots, r0, h);
}

inline std::vector<Point3> au_trajectory(const ScenarioConfig& cfg, const TimeGrid& grid) {
  std::vector<Point3> out;
  out.reserve(static_cast<std::size_t>(grid.num_slots));
  for (int k = 0; k < grid.num_slots; ++k)
    out.push_back(au_position(k, grid.num_slots, cfg.tbs_coverage_radius, cfg.uav_height));
  return out;
}

// Link gains ---------------------------------------------------------------

/// Ground device to sector UAV hovering at height h above `su`.
inline double gain_iot_su(const Point2& device, const Point2& su, double h, double beta0,
                          double fading = 1.0) {
  const double d2 = squared_distance(device, su) + h * h;
  return beta0 * fading * fading / d2;
}

/// Sector UAV to anchor UAV; both at the same height, so only the
/// horizontal separation counts. Floored at kMinAuSuDistance.
inline double gain_au_su(const Point2& su, const Point3& au, double beta0,
                         double fading = 1.0) {
  const double d = std::max(std::sqrt(squared_distance(su, au.horizontal())), kMinAuSuDistance);
  return beta0 * fading * fading / (d * d);
}

inline double gain_au_su(const Point2& su, int slot, const ScenarioConfig& cfg,
                         const TimeGrid& grid, double fading = 1.0) {
  return gain_au_su(su, au_position(slot, grid.num_slots, cfg.tbs_coverage_radius, cfg.uav_height),
                    cfg.beta0, fading);
}

/// Anchor UAV to TBS: the orbit keeps the distance at sqrt(r0^2 + h^2).
inline double gain_au_tbs(double r0, double h, double beta0, double fading = 1.0) {
  return beta0 * fading * fading / (r0 * r0 + h * h);
}

inline double gain_au_tbs(int slot, const ScenarioConfig& cfg, const TimeGrid& grid,
                          double fading = 1.0) {
  if (slot < 0 || slot >= grid.num_slots) throw std::out_of_range("gain_au_tbs: slot");
  return gain_au_tbs(cfg.tbs_coverage_radius, cfg.uav_height, cfg.beta0, fading);
}

// Full gain tables ---------------------------------------------------------

struct ChannelGains {
  /// iot_su[j][i][k]: device i of sector j (position in S_j) during slot k.
  std::vector<std::vector<std::vector<double>>> iot_su;
  /// au_su[j][l]: slot frames[j].begin + l.
  std::vector<std::vector<double>> au_su;
  /// au_tbs[k] for all K slots.
  std::vector<double> au_tbs;
};

inline ChannelGains compute_gains(const ScenarioConfig& cfg, const TimeGrid& grid,
                                  const std::vector<Point2>& devices,
                                  const std::vector<std::vector<std::size_t>>& devices_of_sector,
                                  const std::vector<Point2>& su_positions,
                                  const FadingFn& fading = unit_fading) {
  const auto m = devices_of_sector.size();
  if (su_positions.size() != m)
    throw std::invalid_argument("compute_gains: one SU position per sector required");
  ChannelGains g;
  g.iot_su.resize(m);
  g.au_su.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const int sj = static_cast<int>(j);
    const auto& members = devices_of_sector[j];
    auto& table = g.iot_su[j];
    table.resize(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      table[i].resize(static_cast<std::size_t>(grid.num_slots));
      for (int k = 0; k < grid.num_slots; ++k) {
        table[i][static_cast<std::size_t>(k)] =
            gain_iot_su(devices[members[i]], su_positions[j], cfg.uav_height, cfg.beta0,
                        fading(Link::iot_su, sj, members[i], k));
      }
    }
    const Frame& f = grid.frames[j];
    for (int k = f.begin; k < f.end; ++k)
      g.au_su[j].push_back(gain_au_su(su_positions[j], k, cfg, grid,
                                      fading(Link::au_su, sj, 0, k)));
  }
  g.au_tbs.resize(static_cast<std::size_t>(grid.num_slots));
  for (int k = 0; k < grid.num_slots; ++k)
    g.au_tbs[static_cast<std::size_t>(k)] =
        gain_au_tbs(k, cfg, grid, fading(Link::au_tbs, 0, 0, k));
  return g;
}

}  // namespace uavnoma

#endif  // UAVNOMA_CHANNEL_HPP
