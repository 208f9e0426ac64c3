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


#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "uavnoma/channel.hpp"

namespace uavnoma {
namespace {

constexpr double kR0 = 300.0, kH = 100.0;

void expect_point(const Point3& p, double x, double y, double z) {
  EXPECT_NEAR(p.x, x, 1e-9 * kR0);
  EXPECT_NEAR(p.y, y, 1e-9 * kR0);
  EXPECT_DOUBLE_EQ(p.z, z);
}

TEST(AuPosition, CardinalPoints) {
  expect_point(au_position(0, 80, kR0, kH), kR0, 0.0, kH);
  expect_point(au_position(20, 80, kR0, kH), 0.0, kR0, kH);
  expect_point(au_position(40, 80, kR0, kH), -kR0, 0.0, kH);
  expect_point(au_position(3, 12, kR0, kH), 0.0, kR0, kH);
}

TEST(AuPosition, OutOfRangeSlotThrows) {
  EXPECT_THROW(au_position(-1, 80, kR0, kH), std::out_of_range);
  EXPECT_THROW(au_position(80, 80, kR0, kH), std::out_of_range);
}

TEST(AuPosition, OnOrbitAndPeriodic) {
  for (int k_total : {2, 7, 80, 333}) {
    for (int k = 0; k < k_total; ++k) {
      const Point3 p = au_position(k, k_total, kR0, kH);
      ASSERT_NEAR(p.horizontal().norm(), kR0, 1e-9 * kR0);
      const Point3 q = orbit_position(k + k_total, k_total, kR0, kH);
      ASSERT_EQ(p.x, q.x);
      ASSERT_EQ(p.y, q.y);
    }
  }
}

TEST(AuTrajectory, MatchesGrid) {
  ScenarioConfig c;
  const TimeGrid g = build_time_grid(c);
  const auto t = au_trajectory(c, g);
  ASSERT_EQ(t.size(), 80u);
  expect_point(t[40], -kR0, 0.0, kH);
}

TEST(GainIotSu, DirectlyBelow) {
  EXPECT_DOUBLE_EQ(gain_iot_su({10.0, -4.0}, {10.0, -4.0}, 100.0, 1e-3), 1e-7);
}

TEST(GainIotSu, FadingScalesByMagnitudeSquared) {
  EXPECT_DOUBLE_EQ(gain_iot_su({0, 0}, {0, 0}, 100.0, 1e-3, 0.5), 0.25e-7);
}

TEST(GainIotSu, RotationInvariant) {
  Rng rng(5);
  for (int t = 0; t < 1000; ++t) {
    const double d = 400.0 * rng.uniform01();
    const double a = kTwoPi * rng.uniform01(), b = kTwoPi * rng.uniform01();
    const Point2 su{50.0, -20.0};
    const double ga = gain_iot_su(su + Point2{d * std::cos(a), d * std::sin(a)}, su, kH, 1e-3);
    const double gb = gain_iot_su(su + Point2{d * std::cos(b), d * std::sin(b)}, su, kH, 1e-3);
    ASSERT_LT(testing::rel_diff(ga, gb), 1e-12);
  }
}

TEST(GainIotSu, InverseSquareInSlantDistance) {
  // h = 0 isolates the horizontal term: doubling d quarters the gain.
  const double g1 = gain_iot_su({30.0, 40.0}, {0, 0}, 0.0, 1e-3);
  const double g2 = gain_iot_su({60.0, 80.0}, {0, 0}, 0.0, 1e-3);
  EXPECT_DOUBLE_EQ(g1 / g2, 4.0);
  // With height: slant distance sqrt(d^2 + h^2).
  const double slant = gain_iot_su({300.0, 0.0}, {0, 0}, 400.0, 1e-3);
  EXPECT_DOUBLE_EQ(slant, 1e-3 / 250000.0);
}

TEST(GainIotSu, MonotoneDecreasingInDistance) {
  double prev = INFINITY;
  for (double d = 0.0; d <= 1000.0; d += 0.25) {
    const double g = gain_iot_su({d, 0.0}, {0, 0}, kH, 1e-3);
    ASSERT_LT(g, prev);
    prev = g;
  }
}

TEST(GainAuSu, DistanceFloorOnOrbit) {
  const Point3 au = au_position(0, 80, kR0, kH);
  EXPECT_DOUBLE_EQ(gain_au_su({kR0, 0.0}, au, 1e-3), 1e-3 / (kMinAuSuDistance * kMinAuSuDistance));
  EXPECT_DOUBLE_EQ(gain_au_su({kR0 + 0.5, 0.0}, au, 1e-3), 1e-3);
}

TEST(GainAuSu, SuAtOriginSeesOrbitRadius) {
  ScenarioConfig c;
  const TimeGrid g = build_time_grid(c);
  for (int k = 0; k < g.num_slots; ++k)
    ASSERT_NEAR(gain_au_su({0.0, 0.0}, k, c, g), 1e-3 / 90000.0, 1e-12 * 1e-3 / 90000.0);
}

TEST(GainAuSu, SuOutsideOrbit) {
  ScenarioConfig c;
  const TimeGrid g = build_time_grid(c);
  EXPECT_NEAR(gain_au_su({2 * kR0, 0.0}, 0, c, g), 1e-3 / (kR0 * kR0), 1e-20);
}

TEST(GainAuTbs, Value) {
  EXPECT_DOUBLE_EQ(gain_au_tbs(300.0, 100.0, 1e-3), 1e-8);
  ScenarioConfig c;
  const TimeGrid g = build_time_grid(c);
  EXPECT_EQ(gain_au_tbs(0, c, g), gain_au_tbs(g.num_slots - 1, c, g));
  EXPECT_DOUBLE_EQ(gain_au_tbs(300.0, 0.0, 1e-3), 1e-3 / 90000.0);
}

TEST(ComputeGains, ShapesAndValues) {
  ScenarioConfig c;
  c.num_sectors = 3;
  c.slots_per_frame = 2;
  const TimeGrid g = build_time_grid(c);
  const std::vector<Point2> devices{{400, 10}, {-350, 100}, {380, 60}};
  const std::vector<std::vector<std::size_t>> sec{{0, 2}, {1}, {}};
  const std::vector<Point2> su{{390, 35}, {-350, 100}, {0, -400}};
  const ChannelGains cg = compute_gains(c, g, devices, sec, su);
  ASSERT_EQ(cg.iot_su.size(), 3u);
  ASSERT_EQ(cg.iot_su[0].size(), 2u);
  ASSERT_EQ(cg.iot_su[0][1].size(), 6u);
  EXPECT_TRUE(cg.iot_su[2].empty());
  EXPECT_DOUBLE_EQ(cg.iot_su[1][0][3], 1e-7);
  EXPECT_DOUBLE_EQ(cg.iot_su[0][1][0], gain_iot_su(devices[2], su[0], kH, 1e-3));
  ASSERT_EQ(cg.au_su[1].size(), 2u);
  EXPECT_DOUBLE_EQ(cg.au_su[1][0], gain_au_su(su[1], 2, c, g));
  ASSERT_EQ(cg.au_tbs.size(), 6u);
}

TEST(ComputeGains, FadingHookIsApplied) {
  ScenarioConfig c;
  c.num_sectors = 2;
  c.slots_per_frame = 1;
  const TimeGrid g = build_time_grid(c);
  const FadingFn half = [](Link l, int, std::size_t, int) { return l == Link::iot_su ? 0.5 : 2.0; };
  const ChannelGains cg = compute_gains(c, g, {{400, 0}}, {{0}, {}}, {{400, 0}, {0, -400}}, half);
  EXPECT_DOUBLE_EQ(cg.iot_su[0][0][1], 0.25e-7);
  EXPECT_DOUBLE_EQ(cg.au_tbs[0], 4e-8);
}

TEST(ComputeGains, RejectsMismatchedSuCount) {
  ScenarioConfig c;
  const TimeGrid g = build_time_grid(c);
  EXPECT_THROW(compute_gains(c, g, {}, {{}, {}}, {{0, 0}}), std::invalid_argument);
}

}  // namespace
}  // namespace uavnoma
