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

#ifndef UAVNOMA_PLACEMENT_HPP
#define UAVNOMA_PLACEMENT_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

#include "uavnoma/rng.hpp"
#include "uavnoma/scenario.hpp"
#include "uavnoma/types.hpp"

// Horizontal placement of sector UAVs.
//
// With line-of-sight links and fixed transmit powers, the sector rate depends
// on the SU position only through the device distances, and the placement
// reduces to minimizing sum_i |c - p_i|^2 over c. That objective is a convex
// quadratic whose stationary point is the coordinate-wise mean.

namespace uavnoma {

/// Sum of squared horizontal distances from `c` to every device.
inline double placement_objective(std::span<const Point2> devices, const Point2& c) {
  double s = 0.0;
  for (const auto& p : devices) s += squared_distance(p, c);
  return s;
}

/// Minimizer of placement_objective: the centroid of the devices.
inline Point2 optimal_su_position(std::span<const Point2> devices) {
  if (devices.empty()) throw std::invalid_argument("optimal_su_position: empty sector");
  double sx = 0.0, sy = 0.0;
  for (const auto& p : devices) {
    sx += p.x;
    sy += p.y;
  }
  const double n = static_cast<double>(devices.size());
  return {sx / n, sy / n};
}

/// Uniform point (by area) in the annular wedge of sector j: radius in
/// [r0, R], angle in [2*pi*j/M, 2*pi*(j+1)/M).
inline Point2 random_su_position(int sector, const ScenarioConfig& cfg, Rng& rng) {
  const int m = cfg.num_sectors;
  if (sector < 0 || sector >= m) throw std::out_of_range("random_su_position: sector");
  const double r0 = cfg.tbs_coverage_radius, big_r = cfg.region_radius;
  double r = std::sqrt(rng.uniform01() * (big_r * big_r - r0 * r0) + r0 * r0);
  r = std::clamp(r, r0, big_r);
  const double lo = sector_lower_angle(sector, m);
  const double theta = lo + (kTwoPi / m) * rng.uniform01();
  return {r * std::cos(theta), r * std::sin(theta)};
}

/// SU position for a sector without devices: on the wedge bisector at the
/// mid radius of the annulus.
inline Point2 fallback_su_position(int sector, const ScenarioConfig& cfg) {
  const int m = cfg.num_sectors;
  const double theta = sector_lower_angle(sector, m) + 0.5 * kTwoPi / m;
  const double r = 0.5 * (cfg.tbs_coverage_radius + cfg.region_radius);
  return {r * std::cos(theta), r * std::sin(theta)};
}

struct BoundingBox {
  Point2 lo;
  Point2 hi;
};

inline BoundingBox bounding_box(std::span<const Point2> pts) {
  if (pts.empty()) throw std::invalid_argument("bounding_box: empty point set");
  BoundingBox b{pts.front(), pts.front()};
  for (const auto& p : pts) {
    b.lo.x = std::min(b.lo.x, p.x);
    b.lo.y = std::min(b.lo.y, p.y);
    b.hi.x = std::max(b.hi.x, p.x);
    b.hi.y = std::max(b.hi.y, p.y);
  }
  return b;
}

/// Exhaustive scan of the grid {lo + (a*step, b*step)} inside `box`. Ties go
/// to the smallest x, then the smallest y.
inline Point2 brute_force_su_position(std::span<const Point2> devices, const BoundingBox& box,
                                      double grid_step) {
  if (devices.empty()) throw std::invalid_argument("brute_force_su_position: empty sector");
  if (!(grid_step > 0.0)) throw std::invalid_argument("brute_force_su_position: grid_step <= 0");
  const long nx = static_cast<long>(std::floor((box.hi.x - box.lo.x) / grid_step + 1e-9));
  const long ny = static_cast<long>(std::floor((box.hi.y - box.lo.y) / grid_step + 1e-9));
  Point2 best{};
  double best_obj = std::numeric_limits<double>::infinity();
  for (long a = 0; a <= nx; ++a) {
    const double x = box.lo.x + static_cast<double>(a) * grid_step;
    for (long b = 0; b <= ny; ++b) {
      const Point2 c{x, box.lo.y + static_cast<double>(b) * grid_step};
      const double obj = placement_objective(devices, c);
      if (obj < best_obj) {
        best_obj = obj;
        best = c;
      }
    }
  }
  return best;
}

}  // namespace uavnoma

#endif  // UAVNOMA_PLACEMENT_HPP
