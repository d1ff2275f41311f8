#include "pcreg/geometry.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace pcreg {

double wrap_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // Adding 2*pi to a tiny negative remainder can round up to exactly 2*pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }

double distance_squared(Point2 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance(Point2 a, Point2 b) { return std::sqrt(distance_squared(a, b)); }

double polar_angle(Point2 p) { return std::atan2(p.y, p.x); }

bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Point2 rotate(Point2 p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {p.x * c - p.y * s, p.x * s + p.y * c};
}

PointCloud translate_to_pivot(const PointCloud& cloud, std::size_t pivot) {
  if (pivot >= cloud.size()) {
    throw std::out_of_range("translate_to_pivot: pivot index out of range");
  }
  PointCloud out;
  out.label = cloud.label;
  out.points.reserve(cloud.size());
  const Point2 origin = cloud[pivot];
  for (const Point2& p : cloud.points) {
    out.points.push_back(p - origin);
  }
  return out;
}

double min_pairwise_distance(const PointCloud& cloud) {
  if (cloud.size() < 2) {
    throw std::invalid_argument(
        "min_pairwise_distance: undefined for clouds with fewer than 2 points");
  }
  double best_sq = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < cloud.size(); ++i) {
    for (std::size_t j = i + 1; j < cloud.size(); ++j) {
      const double d = distance_squared(cloud[i], cloud[j]);
      if (d < best_sq) best_sq = d;
    }
  }
  return std::sqrt(best_sq);
}

DeltaReport validate_delta(const PointCloud& x, const PointCloud& y, double delta) {
  if (delta <= 0.0) {
    throw std::invalid_argument("validate_delta: delta must be positive");
  }
  const double dx = min_pairwise_distance(x);
  const double dy = min_pairwise_distance(y);
  DeltaReport report;
  report.min_pairwise = std::min(dx, dy);
  report.ok = delta < report.min_pairwise / 2.0;
  return report;
}

std::optional<std::pair<std::size_t, std::size_t>> find_duplicate(const PointCloud& cloud) {
  std::map<std::pair<double, double>, std::size_t> seen;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto [it, inserted] = seen.try_emplace({cloud[i].x, cloud[i].y}, i);
    if (!inserted) return std::make_pair(it->second, i);
  }
  return std::nullopt;
}

PointCloud apply_motion(const RigidMotion& motion, const PointCloud& x, const PointCloud& y) {
  if (motion.pivot_from >= x.size() || motion.pivot_to >= y.size()) {
    throw std::out_of_range("apply_motion: pivot index out of range");
  }
  const Point2 from = x[motion.pivot_from];
  const Point2 to = y[motion.pivot_to];
  PointCloud out;
  out.label = y.label;
  out.points.reserve(y.size());
  for (const Point2& p : y.points) {
    out.points.push_back(rotate(p - to, motion.theta) + from);
  }
  return out;
}

}  // namespace pcreg
