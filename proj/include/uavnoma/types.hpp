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

#ifndef UAVNOMA_TYPES_HPP
#define UAVNOMA_TYPES_HPP

#include <cmath>
#include <numbers>

namespace uavnoma {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Horizontal coordinate in meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;

  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
};

/// Coordinate in meters; z is the altitude above ground.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Point3&, const Point3&) = default;

  Point2 horizontal() const { return {x, y}; }
};

inline double squared_distance(const Point2& a, const Point2& b) {
  return (a - b).norm2();
}

/// Polar angle wrapped into [0, 2*pi).
inline double polar_angle(const Point2& p) {
  double a = std::atan2(p.y, p.x);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

}  // namespace uavnoma

#endif  // UAVNOMA_TYPES_HPP
