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

#ifndef UAVNOMA_EXPERIMENT_HPP
#define UAVNOMA_EXPERIMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uavnoma/channel.hpp"
#include "uavnoma/parallel.hpp"
#include "uavnoma/placement.hpp"
#include "uavnoma/power_control.hpp"
#include "uavnoma/rate_engine.hpp"
#include "uavnoma/rng.hpp"
#include "uavnoma/scenario.hpp"

namespace uavnoma {

// ---------------------------------------------------------------------------
// Schemes
// ---------------------------------------------------------------------------

enum class Scheme { noma_optimal_placement, noma_random_placement, oma_tdma };

inline constexpr Scheme kAllSchemes[] = {Scheme::noma_optimal_placement,
                                         Scheme::noma_random_placement, Scheme::oma_tdma};

inline std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::noma_optimal_placement: return "noma_optimal_placement";
    case Scheme::noma_random_placement: return "noma_random_placement";
    case Scheme::oma_tdma: return "oma_tdma";
  }
  return "unknown";
}

inline Scheme parse_scheme(std::string_view s) {
  for (Scheme x : kAllSchemes)
    if (to_string(x) == s) return x;
  throw std::invalid_argument("unknown scheme '" + std::string(s) + "'");
}

enum class SuPlacement { optimal, random };

inline SuPlacement placement_of(Scheme s) {
  return s == Scheme::noma_random_placement ? SuPlacement::random : SuPlacement::optimal;
}

// ---------------------------------------------------------------------------
// Deployment
// ---------------------------------------------------------------------------

struct Deployment {
  std::vector<Point2> devices;
  SectorAssignment sectors;
  std::vector<Point2> su_positions;
  std::vector<Point3> au_positions;
  double height = 0.0;

  /// Positions of the devices of sector j, in S_j order.
  std::vector<Point2> sector_devices(std::size_t j) const {
    std::vector<Point2> out;
    for (std::size_t i : sectors.devices_of_sector.at(j)) out.push_back(devices[i]);
    return out;
  }
};

/// Device positions come from the `devices` substream of cfg.seed and random
/// SU positions from the `su_placement` substream, so every scheme sees the
/// same devices for a given seed.
inline Deployment deploy(const ScenarioConfig& cfg, const TimeGrid& grid, SuPlacement placement) {
  Deployment d;
  Rng device_rng = substream(cfg.seed, Stream::devices);
  d.devices = generate_devices(cfg, device_rng);
  d.sectors = sectorize(d.devices, cfg.num_sectors, cfg.tbs_coverage_radius);
  d.height = cfg.uav_height;
  Rng su_rng = substream(cfg.seed, Stream::su_placement);
  for (int j = 0; j < cfg.num_sectors; ++j) {
    const auto members = d.sector_devices(static_cast<std::size_t>(j));
    if (placement == SuPlacement::random)
      d.su_positions.push_back(random_su_position(j, cfg, su_rng));
    else if (members.empty())
      d.su_positions.push_back(fallback_su_position(j, cfg));
    else
      d.su_positions.push_back(optimal_su_position(members));
  }
  d.au_positions = au_trajectory(cfg, grid);
  return d;
}

// ---------------------------------------------------------------------------
// Single run
// ---------------------------------------------------------------------------

struct RunOptions {
  SolverOptions solver;
  int threads = 1;
  FadingFn fading = unit_fading;
};

struct RunResult {
  Scheme scheme = Scheme::noma_optimal_placement;
  ScenarioConfig config;
  TimeGrid grid;
  Deployment deployment;
  ChannelGains gains;
  PowerAllocation allocation;
  RateReport report;
  /// Per sector: the distinct per-slot solves (empty for OMA).
  std::vector<SectorNomaResult> noma;
  /// System sum rate after n = 1, 2, ... solver iterations, each (sector,
  /// slot) contributing its best SIC-feasible objective so far.
  std::vector<double> convergence_trace;

  int solves = 0;
  int nonconverged_solves = 0;
  long long infeasible_denominator_events = 0;
};

inline std::vector<double> system_convergence_trace(const std::vector<SectorNomaResult>& noma,
                                                    const TimeGrid& grid) {
  std::size_t depth = 0;
  for (const auto& s : noma)
    for (const auto& sol : s.solves) depth = std::max(depth, sol.trace.iterations.size());
  std::vector<double> trace(depth, 0.0);
  for (std::size_t n = 0; n < depth; ++n) {
    double total = 0.0;
    for (const auto& s : noma) {
      for (int idx : s.solve_of_slot) {
        if (idx < 0) continue;
        const auto& sol = s.solves[static_cast<std::size_t>(idx)];
        const auto& its = sol.trace.iterations;
        total += its.empty() ? sol.objective : its[std::min(n, its.size() - 1)].objective;
      }
    }
    trace[n] = total / (2.0 * grid.slots_per_frame);
  }
  return trace;
}

/// Deploy, sectorize, place SUs, allocate powers per (sector, slot) and
/// evaluate rates. Deterministic in cfg.seed; `threads` only splits the
/// per-sector work.
inline RunResult run_single(const ScenarioConfig& cfg, Scheme scheme, const RunOptions& opt = {}) {
  cfg.validate();
  RunResult r;
  r.scheme = scheme;
  r.config = cfg;
  r.grid = build_time_grid(cfg);
  r.deployment = deploy(cfg, r.grid, placement_of(scheme));
  r.gains = compute_gains(cfg, r.grid, r.deployment.devices, r.deployment.sectors.devices_of_sector,
                          r.deployment.su_positions, opt.fading);

  const auto m = static_cast<std::size_t>(cfg.num_sectors);
  r.allocation.powers.resize(m);
  if (scheme == Scheme::oma_tdma) {
    r.allocation.scheme = AllocationScheme::oma_tdma;
    for (std::size_t j = 0; j < m; ++j)
      r.allocation.powers[j] = oma_allocate(r.gains.iot_su[j].size(), static_cast<int>(j), r.grid,
                                            cfg.p_u_max);
  } else {
    r.allocation.scheme = AllocationScheme::noma_optimal;
    const PowerControlParams params = PowerControlParams::from(cfg);
    r.noma.resize(m);
    parallel_for(m, opt.threads, [&](std::size_t j) {
      r.noma[j] = noma_allocate(r.gains.iot_su[j], static_cast<int>(j), r.grid, params, opt.solver);
    });
    for (std::size_t j = 0; j < m; ++j) {
      r.allocation.powers[j] = r.noma[j].powers;
      for (const auto& sol : r.noma[j].solves) {
        ++r.solves;
        if (!sol.trace.converged) ++r.nonconverged_solves;
        r.infeasible_denominator_events += sol.trace.infeasible_denominator_events;
      }
    }
    r.convergence_trace = system_convergence_trace(r.noma, r.grid);
  }
  r.report = evaluate_rates(cfg, r.grid, r.gains, r.allocation);
  return r;
}

// ---------------------------------------------------------------------------
// Monte-Carlo sweeps
// ---------------------------------------------------------------------------

enum class SweptParameter { num_devices, num_sectors, p_u_max };

inline std::string_view to_string(SweptParameter p) {
  switch (p) {
    case SweptParameter::num_devices: return "num_devices";
    case SweptParameter::num_sectors: return "num_sectors";
    case SweptParameter::p_u_max: return "p_u_max";
  }
  return "unknown";
}

inline SweptParameter parse_swept_parameter(std::string_view s) {
  for (auto p : {SweptParameter::num_devices, SweptParameter::num_sectors, SweptParameter::p_u_max})
    if (to_string(p) == s) return p;
  throw std::invalid_argument("unknown swept_parameter '" + std::string(s) + "'");
}

inline ScenarioConfig with_parameter(ScenarioConfig cfg, SweptParameter p, double v) {
  switch (p) {
    case SweptParameter::num_devices: cfg.num_devices = static_cast<int>(std::lround(v)); break;
    case SweptParameter::num_sectors: cfg.num_sectors = static_cast<int>(std::lround(v)); break;
    case SweptParameter::p_u_max: cfg.p_u_max = v; break;
  }
  return cfg;
}

struct SweepSpec {
  SweptParameter parameter = SweptParameter::num_devices;
  std::vector<double> values;
  int trials = 100;
  std::vector<Scheme> schemes{Scheme::noma_optimal_placement};
  /// base.seed is the seed base; trial t uses seed base + t.
  ScenarioConfig base;

  void validate() const {
    if (values.empty()) throw std::invalid_argument("sweep: values must be nonempty");
    for (std::size_t i = 1; i < values.size(); ++i)
      if (!(values[i] > values[i - 1]))
        throw std::invalid_argument("sweep: values must be strictly increasing");
    if (trials < 2) throw std::invalid_argument("sweep: trials must be >= 2");
    if (schemes.empty()) throw std::invalid_argument("sweep: at least one scheme required");
    for (double v : values) with_parameter(base, parameter, v).validate();
  }
};

struct TrialOutcome {
  double sum_rate = 0.0;
  double served_fraction = 0.0;
  /// Fraction of sectors violating a relay chain assumption.
  double violation_rate = 0.0;
  int nonconverged_solves = 0;
};

struct ResultRow {
  Scheme scheme = Scheme::noma_optimal_placement;
  SweptParameter parameter = SweptParameter::num_devices;
  double swept_value = 0.0;
  double mean_sum_rate = 0.0;
  double ci95_halfwidth = 0.0;
  double mean_served_fraction = 0.0;
  double feasibility_violation_rate = 0.0;
  int trials = 0;
  std::uint64_t seed_base = 0;
};

struct SweepResult {
  std::vector<ResultRow> rows;  // value-major, then scheme in spec order
  /// outcomes[v][s][t] for value v, scheme s, trial t.
  std::vector<std::vector<std::vector<TrialOutcome>>> outcomes;
};

struct MeanCi {
  double mean = 0.0;
  double ci95 = 0.0;
};

/// Mean and normal-approximation 95% half-width 1.96 * s / sqrt(n), with
/// s the sample standard deviation. Summation runs in index order.
inline MeanCi mean_ci95(const std::vector<double>& xs) {
  MeanCi r;
  if (xs.empty()) return r;
  double s = 0.0;
  for (double x : xs) s += x;
  r.mean = s / static_cast<double>(xs.size());
  if (xs.size() < 2) return r;
  double ss = 0.0;
  for (double x : xs) ss += (x - r.mean) * (x - r.mean);
  r.ci95 = 1.96 * std::sqrt(ss / static_cast<double>(xs.size() - 1)) /
           std::sqrt(static_cast<double>(xs.size()));
  return r;
}

inline TrialOutcome summarize(const RunResult& r) {
  TrialOutcome o;
  o.sum_rate = r.report.system_sum_rate;
  o.served_fraction = r.report.served_fraction;
  o.violation_rate = static_cast<double>(r.report.relay_violations()) / r.config.num_sectors;
  o.nonconverged_solves = r.nonconverged_solves;
  return o;
}

/// Every (value, scheme, trial) is an independent job; results are stored
/// by key and aggregated in key order, so the rows do not depend on the
/// thread count or execution order.
inline SweepResult run_sweep(const SweepSpec& spec, int threads = 1,
                             const SolverOptions& solver = {}) {
  spec.validate();
  const std::size_t nv = spec.values.size(), ns = spec.schemes.size();
  const auto nt = static_cast<std::size_t>(spec.trials);
  SweepResult res;
  res.outcomes.assign(nv, std::vector<std::vector<TrialOutcome>>(ns, std::vector<TrialOutcome>(nt)));

  RunOptions ro;
  ro.solver = solver;
  parallel_for(nv * ns * nt, threads, [&](std::size_t job) {
    const std::size_t t = job % nt, s = (job / nt) % ns, v = job / (nt * ns);
    ScenarioConfig cfg = with_parameter(spec.base, spec.parameter, spec.values[v]);
    cfg.seed = spec.base.seed + t;
    res.outcomes[v][s][t] = summarize(run_single(cfg, spec.schemes[s], ro));
  });

  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t s = 0; s < ns; ++s) {
      std::vector<double> rate, served, viol;
      for (const auto& o : res.outcomes[v][s]) {
        rate.push_back(o.sum_rate);
        served.push_back(o.served_fraction);
        viol.push_back(o.violation_rate);
      }
      ResultRow row;
      row.scheme = spec.schemes[s];
      row.parameter = spec.parameter;
      row.swept_value = spec.values[v];
      const MeanCi rc = mean_ci95(rate);
      row.mean_sum_rate = rc.mean;
      row.ci95_halfwidth = rc.ci95;
      row.mean_served_fraction = mean_ci95(served).mean;
      row.feasibility_violation_rate = mean_ci95(viol).mean;
      row.trials = spec.trials;
      row.seed_base = spec.base.seed;
      res.rows.push_back(row);
    }
  }
  return res;
}

/// All three schemes on the same seeds (common random numbers).
inline SweepResult compare_schemes(const ScenarioConfig& cfg, int trials, int threads = 1,
                                   const SolverOptions& solver = {}) {
  SweepSpec spec;
  spec.parameter = SweptParameter::num_devices;
  spec.values = {static_cast<double>(cfg.num_devices)};
  spec.trials = trials;
  spec.schemes.assign(std::begin(kAllSchemes), std::end(kAllSchemes));
  spec.base = cfg;
  return run_sweep(spec, threads, solver);
}

}  // namespace uavnoma

#endif  // UAVNOMA_EXPERIMENT_HPP
