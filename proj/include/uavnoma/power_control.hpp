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

#ifndef UAVNOMA_POWER_CONTROL_HPP
#define UAVNOMA_POWER_CONTROL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "uavnoma/scenario.hpp"

// Uplink NOMA power control for one sector during one slot.
//
// Devices are indexed in SIC decoding order (descending channel gain). The
// problem is
//
//   maximize   m * log2(1 + sum_i P_i g_i / N0)
//   subject to P_i g_i >= eta * sum_{l>i} P_l g_l,   i = 1..N-1
//              0 <= P_i <= P_max
//
// and is solved by Lagrangian dual decomposition: a Gauss-Seidel sweep sets
// each power to the stationary point of the Lagrangian given the others,
// then the SIC multipliers (lambda) and the power-cap multipliers (mu) take
// a projected subgradient step with diminishing step size 1/n.

namespace uavnoma {

inline double sic_threshold_linear(double eta_db) { return std::pow(10.0, eta_db / 10.0); }

/// Device indices sorted by descending gain; ties keep ascending index.
inline std::vector<std::size_t> decode_order(std::span<const double> gains) {
  if (gains.empty()) throw std::invalid_argument("decode_order: no gains");
  std::vector<std::size_t> idx(gains.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return gains[a] > gains[b]; });
  return idx;
}

/// Constants of one per-slot power control problem.
struct PowerControlParams {
  double prelog = 0.9;        // m
  double noise_power = 1e-12; // N0, watts
  double p_max = 0.5;         // watts
  double eta_sic = 1.0;       // linear SIC ratio

  static PowerControlParams from(const ScenarioConfig& cfg) {
    return {static_cast<double>(cfg.num_sectors - 1) / cfg.num_sectors, cfg.noise_power,
            cfg.p_u_max, sic_threshold_linear(cfg.eta_sic_db)};
  }
};

inline double received_power(std::span<const double> powers, std::span<const double> gains) {
  double s = 0.0;
  for (std::size_t i = 0; i < powers.size(); ++i) s += powers[i] * gains[i];
  return s;
}

/// Sector sum rate m*log2(1 + sum P g / N0), in bit/s/Hz.
inline double sector_objective(std::span<const double> powers, std::span<const double> gains,
                               const PowerControlParams& p) {
  return p.prelog * std::log1p(received_power(powers, gains) / p.noise_power) /
         std::numbers::ln2;
}

/// Checks P_i g_i >= eta * (1 - rel_tol) * sum_{l>i} P_l g_l for every i
/// with nonzero residual interference. Inputs in decode order.
inline bool sic_satisfied(std::span<const double> powers, std::span<const double> gains,
                          double eta, double rel_tol = 0.0) {
  double tail = 0.0;
  for (std::size_t r = powers.size(); r-- > 0;) {
    const double own = powers[r] * gains[r];
    if (tail > 0.0 && own < eta * (1.0 - rel_tol) * tail) return false;
    tail += own;
  }
  return true;
}

/// Projects an allocation onto the SIC-feasible set by shrinking tails.
/// Walking from the weakest device up, whenever device i cannot cover
/// eta times its residual interference, every device decoded after it is
/// scaled down by the same factor. Scaling a tail uniformly keeps the
/// constraints inside it satisfied, so one pass suffices. Powers only ever
/// decrease, so the box constraint is preserved.
inline std::vector<double> restore_sic(std::span<const double> powers,
                                       std::span<const double> gains, double eta) {
  std::vector<double> out(powers.begin(), powers.end());
  const std::size_t n = out.size();
  if (n < 2) return out;
  for (std::size_t i = n - 1; i-- > 0;) {
    double tail = 0.0;
    for (std::size_t l = i + 1; l < n; ++l) tail += out[l] * gains[l];
    const double own = out[i] * gains[i];
    if (tail > 0.0 && own < eta * tail) {
      const double scale = own / (eta * tail);
      for (std::size_t l = i + 1; l < n; ++l) out[l] *= scale;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dual decomposition
// ---------------------------------------------------------------------------

struct SolverOptions {
  double convergence_tol = 1e-6;  // watts, on max |P[n] - P[n-1]|
  /// An iterate only counts as converged if it also meets SIC to this
  /// relative tolerance; a power vector pinned at the caps can be stationary
  /// while the multipliers are still moving.
  double sic_tol = 1e-6;
  int max_iterations = 500;
  double initial_multiplier = 0.01;
  /// Use step delta[n] / g_i^2 for lambda_i instead of delta[n]. The SIC
  /// residual is measured in received watts (~1e-8 at default scales) while
  /// lambda_i enters the power update multiplied by g_i, so the unscaled
  /// step leaves lambda practically frozen.
  bool normalize_sic_step = true;
};

struct DualState {
  std::vector<double> lambda;  // N-1 SIC multipliers
  std::vector<double> mu;      // N power-cap multipliers
  double step = 1.0;           // delta[n] = 1/n
  int iteration = 1;

  static DualState initial(std::size_t n, double value) {
    DualState d;
    d.lambda.assign(n > 0 ? n - 1 : 0, value);
    d.mu.assign(n, value);
    return d;
  }
};

struct ClosedFormPower {
  double power = 0.0;
  /// Denominator of the stationary point was <= 0: the Lagrangian is
  /// nondecreasing in this power, so it is set to P_max.
  bool infeasible_denominator = false;
};

/// Stationary point of the Lagrangian in power i (decode-order index),
/// holding all other powers at their current values, clipped to [0, P_max].
inline ClosedFormPower closed_form_power(std::size_t i, std::span<const double> gains,
                                         std::span<const double> powers, const DualState& dual,
                                         const PowerControlParams& p) {
  const std::size_t n = gains.size();
  if (i >= n) throw std::out_of_range("closed_form_power: device rank");
  const double g = gains[i];
  if (!(g > 0.0)) return {0.0, false};

  double lambda_before = 0.0;
  for (std::size_t l = 0; l < i; ++l) lambda_before += dual.lambda[l];

  const double denom = (i + 1 != n) ? dual.mu[i] - g * (dual.lambda[i] - p.eta_sic * lambda_before)
                                    : dual.mu[i] + p.eta_sic * g * lambda_before;
  if (!(denom > 0.0)) return {p.p_max, true};

  double others = p.noise_power;
  for (std::size_t l = 0; l < n; ++l)
    if (l != i) others += powers[l] * gains[l];
  const double stationary = p.prelog / (std::numbers::ln2 * denom) - others / g;
  return {std::clamp(stationary, 0.0, p.p_max), false};
}

struct IterationRecord {
  int iteration = 0;
  /// Best SIC-feasible objective found up to and including this iteration.
  double objective = 0.0;
  /// Objective of this iterate as produced by the sweep (may violate SIC).
  double iterate_objective = 0.0;
  bool iterate_feasible = true;
  double max_power_change = 0.0;
  /// Powers, lambdas and mus updated during this sweep.
  int parameter_updates = 0;
  double step = 0.0;
  /// Smallest lambda or mu after the sweep's projections.
  double min_multiplier = 0.0;
};

struct SolveTrace {
  std::vector<IterationRecord> iterations;
  bool converged = false;
  /// Iteration limit reached before convergence (warning).
  bool iteration_limit_hit = false;
  int infeasible_denominator_events = 0;
  int best_iteration = 0;
};

struct SectorSlotSolution {
  std::vector<double> powers;  // decode order
  double objective = 0.0;
  SolveTrace trace;
};

/// Runs the dual decomposition for one sector and slot. `gains` must be in
/// decode order. Returns the best SIC-feasible point among the iterates,
/// where an iterate violating SIC is first passed through restore_sic.
inline SectorSlotSolution solve_sector_slot(std::span<const double> gains,
                                            const PowerControlParams& p,
                                            const SolverOptions& opt = {}) {
  const std::size_t n = gains.size();
  for (std::size_t i = 1; i < n; ++i)
    if (gains[i] > gains[i - 1])
      throw std::invalid_argument("solve_sector_slot: gains not in decode order");

  SectorSlotSolution sol;
  sol.powers.assign(n, 0.0);
  if (n == 0 || std::all_of(gains.begin(), gains.end(), [](double g) { return !(g > 0.0); })) {
    sol.trace.converged = true;
    return sol;
  }

  std::vector<double> powers(n, 0.0);
  std::vector<double> previous(n, 0.0);
  DualState dual = DualState::initial(n, opt.initial_multiplier);
  double best = sector_objective(sol.powers, gains, p);  // all-zero start is feasible

  for (int it = 1; it <= opt.max_iterations; ++it) {
    dual.iteration = it;
    dual.step = 1.0 / it;
    previous = powers;
    int updates = 0;

    for (std::size_t i = 0; i < n; ++i) {
      const ClosedFormPower cf = closed_form_power(i, gains, powers, dual, p);
      powers[i] = cf.power;
      ++updates;
      if (cf.infeasible_denominator) ++sol.trace.infeasible_denominator_events;

      if (i + 1 < n) {
        double tail = 0.0;
        for (std::size_t l = i + 1; l < n; ++l) tail += powers[l] * gains[l];
        const double residual = powers[i] * gains[i] - p.eta_sic * tail;
        const double step =
            opt.normalize_sic_step ? dual.step / (gains[i] * gains[i]) : dual.step;
        dual.lambda[i] = std::max(0.0, dual.lambda[i] - step * residual);
        ++updates;
      }
      dual.mu[i] = std::max(0.0, dual.mu[i] - dual.step * (p.p_max - powers[i]));
      ++updates;
    }

    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(powers[i] - previous[i]));

    IterationRecord rec;
    rec.iteration = it;
    rec.iterate_objective = sector_objective(powers, gains, p);
    rec.iterate_feasible = sic_satisfied(powers, gains, p.eta_sic);
    const bool settled = change < opt.convergence_tol &&
                         (rec.iterate_feasible || sic_satisfied(powers, gains, p.eta_sic, opt.sic_tol));
    rec.max_power_change = change;
    rec.parameter_updates = updates;
    rec.step = dual.step;
    rec.min_multiplier = *std::min_element(dual.mu.begin(), dual.mu.end());
    if (!dual.lambda.empty())
      rec.min_multiplier =
          std::min(rec.min_multiplier, *std::min_element(dual.lambda.begin(), dual.lambda.end()));

    std::vector<double> candidate =
        rec.iterate_feasible ? powers : restore_sic(powers, gains, p.eta_sic);
    const double obj = sector_objective(candidate, gains, p);
    // The objective only sees total received power, so distinct allocations
    // tie; rounding-level gains do not displace the incumbent.
    if (obj > best + 1e-12 * best) {
      best = obj;
      sol.powers = std::move(candidate);
      sol.trace.best_iteration = it;
    }
    rec.objective = best;
    sol.trace.iterations.push_back(rec);

    if (settled) {
      sol.trace.converged = true;
      break;
    }
  }
  sol.trace.iteration_limit_hit = !sol.trace.converged;
  sol.objective = best;
  return sol;
}

/// solve_sector_slot for gains in arbitrary device order; powers are
/// returned in the same order as `gains`.
inline SectorSlotSolution allocate_sector_slot(std::span<const double> gains,
                                               const PowerControlParams& p,
                                               const SolverOptions& opt = {}) {
  if (gains.empty()) return {};
  const auto order = decode_order(gains);
  std::vector<double> sorted(gains.size());
  for (std::size_t r = 0; r < order.size(); ++r) sorted[r] = gains[order[r]];
  SectorSlotSolution sol = solve_sector_slot(sorted, p, opt);
  std::vector<double> powers(gains.size());
  for (std::size_t r = 0; r < order.size(); ++r) powers[order[r]] = sol.powers[r];
  sol.powers = std::move(powers);
  return sol;
}

// ---------------------------------------------------------------------------
// Exhaustive grid oracle
// ---------------------------------------------------------------------------

/// Best SIC-feasible point of the product grid `levels`^N (decode-order
/// gains). Exact feasibility, no tolerance. Ties go to the lexicographically
/// smallest power vector. Falls back to all zeros if nothing is feasible.
inline std::vector<double> grid_oracle_sector_slot(std::span<const double> gains,
                                                   const PowerControlParams& p,
                                                   std::span<const double> levels) {
  const std::size_t n = gains.size();
  if (n > 4) throw std::invalid_argument("grid_oracle_sector_slot: at most 4 devices");
  if (levels.empty()) throw std::invalid_argument("grid_oracle_sector_slot: empty grid");
  std::vector<double> sorted_levels(levels.begin(), levels.end());
  std::sort(sorted_levels.begin(), sorted_levels.end());

  std::vector<double> best(n, 0.0);
  if (n == 0) return best;
  double best_obj = -1.0;
  std::vector<std::size_t> digit(n, 0);
  std::vector<double> cur(n);
  const std::size_t g = sorted_levels.size();
  while (true) {
    for (std::size_t i = 0; i < n; ++i) cur[i] = sorted_levels[digit[i]];
    if (sic_satisfied(cur, gains, p.eta_sic)) {
      const double obj = sector_objective(cur, gains, p);
      if (obj > best_obj) {
        best_obj = obj;
        best = cur;
      }
    }
    // Odometer with the last device varying fastest: lexicographic order.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < g) break;
      digit[pos] = 0;
      if (pos == 0) return best_obj < 0.0 ? std::vector<double>(n, 0.0) : best;
    }
  }
}

/// Uniform grid of `points_per_device` levels from 0 to P_max inclusive.
inline std::vector<double> grid_oracle_sector_slot(std::span<const double> gains,
                                                   const PowerControlParams& p,
                                                   int points_per_device) {
  if (points_per_device < 2) throw std::invalid_argument("grid_oracle_sector_slot: need >= 2 points");
  std::vector<double> levels(static_cast<std::size_t>(points_per_device));
  for (int a = 0; a < points_per_device; ++a)
    levels[static_cast<std::size_t>(a)] = p.p_max * a / (points_per_device - 1);
  levels.back() = p.p_max;
  return grid_oracle_sector_slot(gains, p, std::span<const double>(levels));
}

// ---------------------------------------------------------------------------
// Cycle-level allocations
// ---------------------------------------------------------------------------

enum class AllocationScheme { noma_optimal, noma_fullpower, oma_tdma };

inline std::string_view to_string(AllocationScheme s) {
  switch (s) {
    case AllocationScheme::noma_optimal: return "noma_optimal";
    case AllocationScheme::noma_fullpower: return "noma_fullpower";
    case AllocationScheme::oma_tdma: return "oma_tdma";
  }
  return "unknown";
}

/// powers[j][i][k]: watts of device i (position in S_j) of sector j in slot k.
struct PowerAllocation {
  AllocationScheme scheme = AllocationScheme::noma_optimal;
  std::vector<std::vector<std::vector<double>>> powers;
};

using SectorPowers = std::vector<std::vector<double>>;

/// Cyclical TDMA-OMA baseline: the K-L slots outside the sector's own
/// frame are handed out round-robin; the scheduled device sends at P_max.
inline SectorPowers oma_allocate(std::size_t num_devices, int sector, const TimeGrid& grid,
                                 double p_max) {
  SectorPowers out(num_devices, std::vector<double>(static_cast<std::size_t>(grid.num_slots), 0.0));
  if (num_devices == 0) return out;
  const Frame& own = grid.frames.at(static_cast<std::size_t>(sector));
  std::size_t turn = 0;
  for (int k = 0; k < grid.num_slots; ++k) {
    if (own.contains(k)) continue;
    out[turn % num_devices][static_cast<std::size_t>(k)] = p_max;
    ++turn;
  }
  return out;
}

/// Every device at P_max in every slot outside the sector's own frame,
/// without regard to SIC.
inline SectorPowers fullpower_allocate(std::size_t num_devices, int sector, const TimeGrid& grid,
                                       double p_max) {
  SectorPowers out(num_devices, std::vector<double>(static_cast<std::size_t>(grid.num_slots), 0.0));
  const Frame& own = grid.frames.at(static_cast<std::size_t>(sector));
  for (auto& row : out)
    for (int k = 0; k < grid.num_slots; ++k)
      if (!own.contains(k)) row[static_cast<std::size_t>(k)] = p_max;
  return out;
}

/// Per-slot NOMA solutions of one sector. Consecutive slots with identical
/// gain columns share one solve.
struct SectorNomaResult {
  SectorPowers powers;
  std::vector<SectorSlotSolution> solves;
  /// Index into `solves` per slot; -1 during the sector's own frame.
  std::vector<int> solve_of_slot;
};

/// `gains[i][k]` for the devices of sector `sector`.
inline SectorNomaResult noma_allocate(const std::vector<std::vector<double>>& gains, int sector,
                                      const TimeGrid& grid, const PowerControlParams& p,
                                      const SolverOptions& opt = {}) {
  const std::size_t n = gains.size();
  const auto num_slots = static_cast<std::size_t>(grid.num_slots);
  SectorNomaResult res;
  res.powers.assign(n, std::vector<double>(num_slots, 0.0));
  res.solve_of_slot.assign(num_slots, -1);
  if (n == 0) return res;

  const Frame& own = grid.frames.at(static_cast<std::size_t>(sector));
  std::vector<double> column(n), last_column;
  for (std::size_t k = 0; k < num_slots; ++k) {
    if (own.contains(static_cast<int>(k))) continue;
    for (std::size_t i = 0; i < n; ++i) column[i] = gains[i][k];
    if (res.solves.empty() || column != last_column) {
      res.solves.push_back(allocate_sector_slot(column, p, opt));
      last_column = column;
    }
    const auto& s = res.solves.back();
    res.solve_of_slot[k] = static_cast<int>(res.solves.size() - 1);
    for (std::size_t i = 0; i < n; ++i) res.powers[i][k] = s.powers[i];
  }
  return res;
}

}  // namespace uavnoma

#endif  // UAVNOMA_POWER_CONTROL_HPP
