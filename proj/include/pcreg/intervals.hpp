#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "pcreg/geometry.hpp"

namespace pcreg {

enum class IntervalKind { kEmpty, kFull, kArc };

/// Feasibility set of rotation angles that bring a point y within delta of a
/// point x, both taken relative to their pivots. The condition
/// ||x - R(theta) y|| <= delta either holds for no angle (kEmpty), for every
/// angle (kFull), or exactly on a closed arc centered on the polar-angle
/// difference of the two points.
struct AngleIntervalCase {
  IntervalKind kind = IntervalKind::kEmpty;
  double center = 0.0;      // polar_angle(x) - polar_angle(y); kArc only
  double half_width = 0.0;  // in [0, pi]; kArc only

  static AngleIntervalCase empty() { return {IntervalKind::kEmpty, 0.0, 0.0}; }
  static AngleIntervalCase full() { return {IntervalKind::kFull, 0.0, 0.0}; }
  static AngleIntervalCase arc(double center, double half_width) {
    return {IntervalKind::kArc, center, half_width};
  }
};

/// Closed subinterval of [0, 2*pi], start <= end.
struct AngleInterval {
  double start = 0.0;
  double end = 0.0;
};

/// Endpoint event of the sweep: +1 enters an interval, -1 leaves one.
struct AngleEvent {
  double angle = 0.0;
  int delta = 0;
};

/// Left endpoint and end of a plateau on which the running interval count
/// attains its maximum, together with that maximum.
struct SweepOutcome {
  double theta = 0.0;
  double plateau_end = kTwoPi;
  int arc_overlap = 0;
};

/// Classifies the feasible-angle set for one point pair. Inputs are the
/// pivot-relative points; both must be nonzero (the pivots themselves are
/// excluded from pairing).
AngleIntervalCase match_interval(Point2 x, Point2 y, double delta);

namespace detail {
// Tolerance for floating-point overshoot of the arccos argument at the
// Empty/Arc and Full/Arc classification boundaries.
inline constexpr double kCosineClamp = 1e-12;
}  // namespace detail

/// Same classification from polar data: norms of the two pivot-relative points
/// and the difference of their polar angles. match_interval is a thin wrapper,
/// so both entry points agree bit for bit.
inline AngleIntervalCase match_interval_polar(double norm_x, double norm_y, double angle_diff,
                                              double delta) {
  if (delta <= 0.0) {
    throw std::invalid_argument("match_interval: delta must be positive");
  }
  if (norm_x == 0.0 || norm_y == 0.0) {
    throw std::invalid_argument("match_interval: pivot leak (zero-norm point)");
  }
  double c = (norm_x * norm_x + norm_y * norm_y - delta * delta) / (2.0 * norm_x * norm_y);
  if (c > 1.0 && c <= 1.0 + detail::kCosineClamp) c = 1.0;
  if (c < -1.0 && c >= -1.0 - detail::kCosineClamp) c = -1.0;
  if (c > 1.0) return AngleIntervalCase::empty();
  if (c < -1.0) return AngleIntervalCase::full();
  return AngleIntervalCase::arc(angle_diff, std::acos(c));
}

/// An arc reduced modulo 2*pi: one subinterval of [0, 2*pi], or two when the
/// raw arc straddles 0 (one part starting at 0, one ending at 2*pi).
struct SplitArc {
  std::array<AngleInterval, 2> parts{};
  int count = 0;
};

SplitArc normalize_mod_2pi(const AngleIntervalCase& arc);

/// Endpoint sweep: sorts interval endpoints, scans with a +/-1 counter, and
/// returns the first plateau attaining the maximum count. At equal angles the
/// -1 events are processed first, so two intervals that merely touch at a
/// point never count as overlapping there.
SweepOutcome sweep_max_overlap(std::span<const AngleInterval> intervals);

/// All plateaus attaining the maximum count, in increasing angle order.
std::vector<SweepOutcome> sweep_max_plateaus(std::span<const AngleInterval> intervals);

}  // namespace pcreg
