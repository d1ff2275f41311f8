#include "pcreg/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcreg {

namespace {

std::vector<AngleEvent> make_events(std::span<const AngleInterval> intervals) {
  std::vector<AngleEvent> events;
  events.reserve(2 * intervals.size());
  for (const AngleInterval& iv : intervals) {
    events.push_back({iv.start, +1});
    events.push_back({iv.end, -1});
  }
  // Lexicographic order puts -1 before +1 at equal angles, so the counter
  // never takes a transitory value across a shared endpoint.
  std::sort(events.begin(), events.end(), [](const AngleEvent& a, const AngleEvent& b) {
    if (a.angle != b.angle) return a.angle < b.angle;
    return a.delta < b.delta;
  });
  return events;
}

}  // namespace

AngleIntervalCase match_interval(Point2 x, Point2 y, double delta) {
  const double nx = norm(x);
  const double ny = norm(y);
  if (nx == 0.0 || ny == 0.0) {
    throw std::invalid_argument("match_interval: pivot leak (zero-norm point)");
  }
  return match_interval_polar(nx, ny, polar_angle(x) - polar_angle(y), delta);
}

SplitArc normalize_mod_2pi(const AngleIntervalCase& arc) {
  if (arc.kind != IntervalKind::kArc) {
    throw std::invalid_argument("normalize_mod_2pi: expected an Arc case");
  }
  SplitArc out;
  if (2.0 * arc.half_width >= kTwoPi) {
    out.parts[0] = {0.0, kTwoPi};
    out.count = 1;
    return out;
  }
  const double start = wrap_angle(arc.center - arc.half_width);
  const double end = start + 2.0 * arc.half_width;
  if (end <= kTwoPi) {
    out.parts[0] = {start, end};
    out.count = 1;
    return out;
  }
  out.parts[0] = {0.0, end - kTwoPi};
  out.parts[1] = {start, kTwoPi};
  out.count = 2;
  return out;
}

SweepOutcome sweep_max_overlap(std::span<const AngleInterval> intervals) {
  if (intervals.empty()) return {0.0, kTwoPi, 0};
  const std::vector<AngleEvent> events = make_events(intervals);
  int run = 0;
  int best = 0;
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    run += events[i].delta;
    if (run > best) {
      best = run;
      best_index = i;
    }
  }
  if (best == 0) return {0.0, kTwoPi, 0};
  // The running sum ends at 0, so a positive maximum is never attained at the
  // last event and the plateau end always exists.
  const double theta = events[best_index].angle;
  const double plateau_end =
      best_index + 1 < events.size() ? events[best_index + 1].angle : kTwoPi;
  return {theta, plateau_end, best};
}

std::vector<SweepOutcome> sweep_max_plateaus(std::span<const AngleInterval> intervals) {
  std::vector<SweepOutcome> out;
  if (intervals.empty()) {
    out.push_back({0.0, kTwoPi, 0});
    return out;
  }
  const std::vector<AngleEvent> events = make_events(intervals);
  int run = 0;
  int best = 0;
  for (const AngleEvent& ev : events) {
    run += ev.delta;
    best = std::max(best, run);
  }
  if (best == 0) {
    out.push_back({0.0, kTwoPi, 0});
    return out;
  }
  run = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    run += events[i].delta;
    if (run == best) {
      const double plateau_end =
          i + 1 < events.size() ? events[i + 1].angle : kTwoPi;
      out.push_back({events[i].angle, plateau_end, best});
    }
  }
  return out;
}

}  // namespace pcreg
