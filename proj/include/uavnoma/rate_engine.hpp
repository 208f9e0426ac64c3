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

#ifndef UAVNOMA_RATE_ENGINE_HPP
#define UAVNOMA_RATE_ENGINE_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "uavnoma/channel.hpp"
#include "uavnoma/power_control.hpp"
#include "uavnoma/scenario.hpp"

// Rates are spectral efficiencies (bit/s/Hz); data volumes are rate * seconds.

namespace uavnoma {

inline double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

/// Rate of device i (decode order) under SIC: only devices decoded after it
/// interfere.
inline double device_rate(std::size_t i, std::span<const double> powers,
                          std::span<const double> gains, double prelog, double noise) {
  double interference = 0.0;
  for (std::size_t l = i + 1; l < powers.size(); ++l) interference += powers[l] * gains[l];
  return prelog * log2_1p(powers[i] * gains[i] / (interference + noise));
}

/// Aggregate form m*log2(1 + sum P g / N0). Equals the sum of device_rate
/// over all devices for any decoding order.
inline double sector_slot_rate(std::span<const double> powers, std::span<const double> gains,
                               double prelog, double noise) {
  return prelog * log2_1p(received_power(powers, gains) / noise);
}

/// Relay rate of a sector: sum_k R_{j,k} / (2L).
inline double sector_relay_rate(std::span<const double> slot_rates, int slots_per_frame) {
  double s = 0.0;
  for (double r : slot_rates) s += r;
  return s / (2.0 * slots_per_frame);
}

/// Half-slot link capacity (1/2M) log2(1 + P g / N0).
inline double relay_capacity(double power, double gain, double noise, int num_sectors) {
  return log2_1p(power * gain / noise) / (2.0 * num_sectors);
}

struct RelayCapacities {
  std::vector<double> au_su;   // over the slots of the sector's frame
  std::vector<double> au_tbs;  // over all K slots
};

inline RelayCapacities relay_capacities(std::span<const double> au_su_gains,
                                        std::span<const double> au_tbs_gains,
                                        const ScenarioConfig& cfg) {
  RelayCapacities c;
  for (double g : au_su_gains)
    c.au_su.push_back(relay_capacity(cfg.p_su, g, cfg.noise_power, cfg.num_sectors));
  for (double g : au_tbs_gains)
    c.au_tbs.push_back(relay_capacity(cfg.p_au, g, cfg.noise_power, cfg.num_sectors));
  return c;
}

/// Capacities for an SU at `su` relaying to an anchor UAV on its orbit
/// (unit fading).
inline RelayCapacities relay_capacities(const Point2& su, int sector, const ScenarioConfig& cfg,
                                        const TimeGrid& grid) {
  std::vector<double> g_su, g_tbs;
  const Frame& f = grid.frames.at(static_cast<std::size_t>(sector));
  for (int k = f.begin; k < f.end; ++k) g_su.push_back(gain_au_su(su, k, cfg, grid));
  for (int k = 0; k < grid.num_slots; ++k) g_tbs.push_back(gain_au_tbs(k, cfg, grid));
  return relay_capacities(g_su, g_tbs, cfg);
}

/// The relay chain assumptions for one sector, checked over its frame.
struct RelayFeasibility {
  bool tbs_covers_su = true;   // C_AU,TBS(k) >= C_AU,SU(k) for all k in T_j
  bool su_covers_rate = true;  // C_AU,SU(k) >= R_j for all k in T_j

  bool ok() const { return tbs_covers_su && su_covers_rate; }
};

inline RelayFeasibility check_relay_feasibility(const RelayCapacities& cap, const Frame& frame,
                                                double relay_rate) {
  RelayFeasibility f;
  for (int l = 0; l < frame.size(); ++l) {
    const double su = cap.au_su.at(static_cast<std::size_t>(l));
    const double tbs = cap.au_tbs.at(static_cast<std::size_t>(frame.begin + l));
    if (tbs < su) f.tbs_covers_su = false;
    if (su < relay_rate) f.su_covers_rate = false;
  }
  return f;
}

inline double system_sum_rate(std::span<const double> relay_rates) {
  double s = 0.0;
  for (double r : relay_rates) s += r;
  return s;
}

/// Slot-major evaluation (1/2L) sum_k sum_j R_{j,k}; must agree with
/// system_sum_rate over sector_relay_rate.
inline double system_sum_rate_slot_major(const std::vector<std::vector<double>>& slot_rates,
                                         int num_slots, int slots_per_frame) {
  double total = 0.0;
  for (int k = 0; k < num_slots; ++k) {
    double per_slot = 0.0;
    for (const auto& sector : slot_rates) per_slot += sector.at(static_cast<std::size_t>(k));
    total += per_slot;
  }
  return total / (2.0 * slots_per_frame);
}

/// Fraction of devices with nonzero transmit energy over the cycle.
inline double served_fraction(const PowerAllocation& alloc) {
  std::size_t devices = 0, served = 0;
  for (const auto& sector : alloc.powers) {
    for (const auto& row : sector) {
      ++devices;
      for (double p : row) {
        if (p > 0.0) {
          ++served;
          break;
        }
      }
    }
  }
  return devices == 0 ? 0.0 : static_cast<double>(served) / static_cast<double>(devices);
}

struct RateReport {
  AllocationScheme scheme = AllocationScheme::noma_optimal;
  /// device_rate[j][i][k], i = position in S_j.
  std::vector<std::vector<std::vector<double>>> device_rate;
  /// sector_slot_rate[j][k] = R_{j,k}.
  std::vector<std::vector<double>> sector_slot_rate;
  std::vector<double> sector_data;        // D_j = sum_k R_{j,k} * tau
  std::vector<double> sector_relay_rate;  // R_j
  std::vector<RelayCapacities> capacities;
  std::vector<RelayFeasibility> feasibility;
  double system_sum_rate = 0.0;
  double system_sum_rate_slot_major = 0.0;
  double served_fraction = 0.0;

  int relay_violations() const {
    int v = 0;
    for (const auto& f : feasibility) v += f.ok() ? 0 : 1;
    return v;
  }
};

/// Evaluates every rate quantity of an allocation. Per-device rates follow
/// the decode order of each slot's gains.
inline RateReport evaluate_rates(const ScenarioConfig& cfg, const TimeGrid& grid,
                                 const ChannelGains& gains, const PowerAllocation& alloc) {
  const std::size_t m = gains.iot_su.size();
  if (alloc.powers.size() != m) throw std::invalid_argument("evaluate_rates: sector count mismatch");
  const auto num_slots = static_cast<std::size_t>(grid.num_slots);
  const double prelog = grid.prelog;
  const double noise = cfg.noise_power;

  RateReport rep;
  rep.scheme = alloc.scheme;
  rep.device_rate.resize(m);
  rep.sector_slot_rate.assign(m, std::vector<double>(num_slots, 0.0));
  rep.sector_data.assign(m, 0.0);
  rep.sector_relay_rate.assign(m, 0.0);

  std::vector<double> p_col, g_col;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& g = gains.iot_su[j];
    const auto& p = alloc.powers[j];
    const std::size_t n = g.size();
    if (p.size() != n) throw std::invalid_argument("evaluate_rates: device count mismatch");
    rep.device_rate[j].assign(n, std::vector<double>(num_slots, 0.0));
    const Frame& own = grid.frames[j];
    for (std::size_t k = 0; k < num_slots; ++k) {
      if (n == 0 || own.contains(static_cast<int>(k))) continue;
      std::vector<double> col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = g[i][k];
      const auto order = decode_order(col);
      p_col.resize(n);
      g_col.resize(n);
      for (std::size_t r = 0; r < n; ++r) {
        p_col[r] = p[order[r]][k];
        g_col[r] = g[order[r]][k];
      }
      for (std::size_t r = 0; r < n; ++r)
        rep.device_rate[j][order[r]][k] = device_rate(r, p_col, g_col, prelog, noise);
      rep.sector_slot_rate[j][k] = sector_slot_rate(p_col, g_col, prelog, noise);
    }
    double total = 0.0;
    for (double r : rep.sector_slot_rate[j]) total += r;
    rep.sector_data[j] = total * grid.slot_duration;
    rep.sector_relay_rate[j] = sector_relay_rate(rep.sector_slot_rate[j], grid.slots_per_frame);

    rep.capacities.push_back(relay_capacities(gains.au_su[j], gains.au_tbs, cfg));
    rep.feasibility.push_back(
        check_relay_feasibility(rep.capacities.back(), own, rep.sector_relay_rate[j]));
  }
  rep.system_sum_rate = system_sum_rate(rep.sector_relay_rate);
  rep.system_sum_rate_slot_major =
      system_sum_rate_slot_major(rep.sector_slot_rate, grid.num_slots, grid.slots_per_frame);
  rep.served_fraction = served_fraction(alloc);
  return rep;
}

}  // namespace uavnoma

#endif  // UAVNOMA_RATE_ENGINE_HPP
