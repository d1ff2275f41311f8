#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "pcreg/geometry.hpp"
#include "pcreg/synth.hpp"

namespace testutil {

inline bool near_abs(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool within_ulps(double a, double b, int ulps) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= ulps * std::numeric_limits<double>::epsilon() * scale;
}

/// Equilateral triangle of side 2*sqrt(3), first vertex at the origin.
inline pcreg::PointCloud triangle_cloud() {
  const double side = 2.0 * std::sqrt(3.0);
  pcreg::PointCloud cloud;
  cloud.label = "triangle";
  cloud.points = {{0.0, 0.0}, {side, 0.0}, {side / 2.0, side * std::sqrt(3.0) / 2.0}};
  return cloud;
}

/// Segment of the same length as the triangle side.
inline pcreg::PointCloud segment_cloud() {
  const double side = 2.0 * std::sqrt(3.0);
  pcreg::PointCloud cloud;
  cloud.label = "segment";
  cloud.points = {{0.0, 0.0}, {side, 0.0}};
  return cloud;
}

/// Circular distance between two angles, radians.
inline double circular_distance(double a, double b) {
  const double d = pcreg::wrap_angle(a - b);
  return std::min(d, pcreg::kTwoPi - d);
}

}  // namespace testutil
