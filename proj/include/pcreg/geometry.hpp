#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcreg {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Reduces an angle to [0, 2*pi).
double wrap_angle(double theta);

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

double norm(Point2 p);
double distance_squared(Point2 a, Point2 b);
double distance(Point2 a, Point2 b);

/// atan2(y, x), in (-pi, pi].
double polar_angle(Point2 p);

bool is_finite(Point2 p);

/// Rotates p about the origin by theta radians, counterclockwise.
Point2 rotate(Point2 p, double theta);

/// Ordered list of pairwise-distinct points. Generators and file readers enforce
/// distinctness; transforms preserve point order, so an index always refers to
/// the same original point.
struct PointCloud {
  std::vector<Point2> points;
  std::string label;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  Point2& operator[](std::size_t i) { return points[i]; }
  const Point2& operator[](std::size_t i) const { return points[i]; }
};

/// Returns the cloud translated so that points[pivot] lands exactly on the origin.
PointCloud translate_to_pivot(const PointCloud& cloud, std::size_t pivot);

/// Smallest distance between two points of the cloud. Requires size >= 2.
double min_pairwise_distance(const PointCloud& cloud);

struct DeltaReport {
  double min_pairwise = 0.0;  // min(Delta(X), Delta(Y))
  bool ok = false;            // delta < min_pairwise / 2
};

/// Checks the injective-matching condition delta < Delta/2 for a cloud pair.
DeltaReport validate_delta(const PointCloud& x, const PointCloud& y, double delta);

/// First pair of bitwise-identical points in index order, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_duplicate(const PointCloud& cloud);

struct MatchPair {
  std::size_t i = 0;      // index into X
  std::size_t j = 0;      // index into Y
  double distance = 0.0;  // post-transform separation
};

struct RigidMotion {
  double theta = 0.0;          // in [0, 2*pi)
  std::size_t pivot_from = 0;  // index into X
  std::size_t pivot_to = 0;    // index into Y
};

/// Maps Y into X's frame: y -> R(theta) * (y - y[pivot_to]) + x[pivot_from].
PointCloud apply_motion(const RigidMotion& motion, const PointCloud& x, const PointCloud& y);

}  // namespace pcreg
