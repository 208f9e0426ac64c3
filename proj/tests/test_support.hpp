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

#ifndef UAVNOMA_TESTS_TEST_SUPPORT_HPP
#define UAVNOMA_TESTS_TEST_SUPPORT_HPP

// Random instance generators and independent oracles shared by the unit
// and acceptance tests. Nothing here calls into the code it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "uavnoma/rng.hpp"
#include "uavnoma/types.hpp"

namespace uavnoma::testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Gains of ground devices seen from a UAV at 100 m, horizontal offsets up
/// to `max_offset` meters, sorted descending.
inline std::vector<double> random_sorted_gains(Rng& rng, std::size_t n, double beta0 = 1e-3,
                                               double h = 100.0, double max_offset = 250.0) {
  std::vector<double> g(n);
  for (auto& x : g) {
    const double d = max_offset * rng.uniform01();
    x = beta0 / (d * d + h * h);
  }
  std::sort(g.begin(), g.end(), std::greater<>());
  return g;
}

/// Direct transcription of the per-device rate sum, with interference from
/// devices later in the list.
inline double sum_of_device_rates_oracle(const std::vector<double>& p, const std::vector<double>& g,
                                         double m, double n0) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double interference = 0.0;
    for (std::size_t l = i + 1; l < p.size(); ++l) interference += p[l] * g[l];
    total += m * std::log2(1.0 + p[i] * g[i] / (interference + n0));
  }
  return total;
}

/// Largest total received power sum P_i g_i over the box and SIC
/// constraints, for gains in decode order. Greedy from the strongest device:
/// each device takes as much as its cap and the budget left by the devices
/// above it allow, and the budget of the remaining tail is then the smaller
/// of what is left and its own share divided by eta.
inline double max_received_power_oracle(const std::vector<double>& g, double p_max, double eta) {
  double budget = INFINITY, total = 0.0;
  for (double gi : g) {
    const double x = std::min(p_max * gi, budget);
    total += x;
    budget = std::min(budget - x, x / eta);
  }
  return total;
}

/// Exhaustive grid scan for the placement objective.
inline Point2 grid_scan_centroid(const std::vector<Point2>& pts, double x0, double x1, double y0,
                                 double y1, double step) {
  Point2 best{};
  double best_obj = INFINITY;
  for (double x = x0; x <= x1 + 1e-12; x += step) {
    for (double y = y0; y <= y1 + 1e-12; y += step) {
      double obj = 0.0;
      for (const auto& p : pts) obj += (p.x - x) * (p.x - x) + (p.y - y) * (p.y - y);
      if (obj < best_obj) {
        best_obj = obj;
        best = {x, y};
      }
    }
  }
  return best;
}

}  // namespace uavnoma::testing

#endif  // UAVNOMA_TESTS_TEST_SUPPORT_HPP
