#include "pcreg/registration.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

namespace pcreg {

namespace {

void check_configuration(const PointCloud& x, const PointCloud& y, std::size_t p,
                         std::size_t q, double delta) {
  if (p >= x.size() || q >= y.size()) {
    throw std::out_of_range("pivot index out of range");
  }
  if (delta <= 0.0) {
    throw std::invalid_argument("delta must be positive");
  }
}

inline double pair_distance_squared(const PointCloud& x, const PointCloud& y, std::size_t p,
                                    std::size_t q, std::size_t i, std::size_t j, double cos_t,
                                    double sin_t) {
  const double xi = x[i].x - x[p].x;
  const double yi = x[i].y - x[p].y;
  const double xj = y[j].x - y[q].x;
  const double yj = y[j].y - y[q].y;
  const double rx = xj * cos_t - yj * sin_t;
  const double ry = xj * sin_t + yj * cos_t;
  const double dx = xi - rx;
  const double dy = yi - ry;
  return dx * dx + dy * dy;
}

bool better(const PivotSolution& a, const PivotSolution& b) {
  if (a.k_total != b.k_total) return a.k_total > b.k_total;
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  return a.theta < b.theta;
}

unsigned resolve_workers(unsigned requested, std::size_t task_count) {
  unsigned workers = requested;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
  }
  return static_cast<unsigned>(std::min<std::size_t>(workers, task_count));
}

// Fills solutions[p * N + q] for every pivot pair. Each slot has exactly one
// writer and the reduction happens after join, so the outcome is identical for
// any worker count.
void run_pivot_tasks(const PointCloud& x, const PointCloud& y, double delta,
                     unsigned parallelism, std::vector<PivotSolution>& solutions) {
  const std::size_t total = solutions.size();
  const std::size_t n = y.size();
  const unsigned workers = resolve_workers(parallelism, total);
  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t f = lo; f < hi; ++f) {
      solutions[f] = solve_pivot(x, y, f / n, f % n, delta);
    }
  };
  if (workers <= 1) {
    run_range(0, total);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(total, static_cast<std::size_t>(w) * chunk);
    const std::size_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi, w] {
      try {
        run_range(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

DeltaRejection::DeltaRejection(double delta_in, double half_min_distance_in)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "delta " << delta_in << " rejected: injective matching requires delta < "
            << half_min_distance_in;
        return msg.str();
      }()),
      delta(delta_in),
      half_min_distance(half_min_distance_in) {}

int count_matches(const PointCloud& x, const PointCloud& y, std::size_t p, std::size_t q,
                  double theta, double delta) {
  check_configuration(x, y, p, q, delta);
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const double limit = delta * delta;
  int count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == p) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (j == q) continue;
      if (pair_distance_squared(x, y, p, q, i, j, cos_t, sin_t) <= limit) ++count;
    }
  }
  return count;
}

long long energy(const PointCloud& x, const PointCloud& y, std::size_t p, std::size_t q,
                 double theta, double delta) {
  check_configuration(x, y, p, q, delta);
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const double limit = delta * delta;
  long long sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == p) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (j == q) continue;
      if (pair_distance_squared(x, y, p, q, i, j, cos_t, sin_t) > limit) ++sum;
    }
  }
  return sum;
}

int collect_pivot_intervals(const PointCloud& x, const PointCloud& y, std::size_t p,
                            std::size_t q, double delta,
                            std::vector<AngleInterval>& intervals) {
  check_configuration(x, y, p, q, delta);
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  std::vector<double> norm_x(m), angle_x(m), norm_y(n), angle_y(n);
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 d = x[i] - x[p];
    norm_x[i] = norm(d);
    angle_x[i] = polar_angle(d);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Point2 d = y[j] - y[q];
    norm_y[j] = norm(d);
    angle_y[j] = polar_angle(d);
  }
  int full_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == p) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == q) continue;
      const AngleIntervalCase c =
          match_interval_polar(norm_x[i], norm_y[j], angle_x[i] - angle_y[j], delta);
      if (c.kind == IntervalKind::kEmpty) continue;
      if (c.kind == IntervalKind::kFull) {
        ++full_count;
        continue;
      }
      const SplitArc split = normalize_mod_2pi(c);
      for (int k = 0; k < split.count; ++k) intervals.push_back(split.parts[k]);
    }
  }
  return full_count;
}

PivotSolution solve_pivot(const PointCloud& x, const PointCloud& y, std::size_t p,
                          std::size_t q, double delta) {
  std::vector<AngleInterval> intervals;
  const int full_count = collect_pivot_intervals(x, y, p, q, delta, intervals);
  const SweepOutcome sweep = sweep_max_overlap(intervals);
  return {p, q, sweep.theta, sweep.plateau_end, sweep.arc_overlap + full_count + 1};
}

CorrespondenceSet extract_correspondences(const PointCloud& x, const PointCloud& y,
                                          std::size_t p, std::size_t q, double theta,
                                          double delta) {
  check_configuration(x, y, p, q, delta);
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const double limit = delta * delta;
  std::vector<MatchPair> raw;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == p) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (j == q) continue;
      const double d2 = pair_distance_squared(x, y, p, q, i, j, cos_t, sin_t);
      if (d2 <= limit) raw.push_back({i, j, std::sqrt(d2)});
    }
  }

  std::vector<char> used_i(x.size(), 0), used_j(y.size(), 0);
  bool injective = true;
  for (const MatchPair& pair : raw) {
    if (used_i[pair.i] || used_j[pair.j]) {
      injective = false;
      break;
    }
    used_i[pair.i] = 1;
    used_j[pair.j] = 1;
  }

  CorrespondenceSet out;
  out.non_injective = !injective;
  std::vector<MatchPair> kept;
  if (injective) {
    kept = std::move(raw);
  } else {
    std::sort(raw.begin(), raw.end(), [](const MatchPair& a, const MatchPair& b) {
      if (a.distance != b.distance) return a.distance < b.distance;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    std::fill(used_i.begin(), used_i.end(), 0);
    std::fill(used_j.begin(), used_j.end(), 0);
    for (const MatchPair& pair : raw) {
      if (used_i[pair.i] || used_j[pair.j]) continue;
      used_i[pair.i] = 1;
      used_j[pair.j] = 1;
      kept.push_back(pair);
    }
    std::sort(kept.begin(), kept.end(), [](const MatchPair& a, const MatchPair& b) {
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
  }
  out.pairs.reserve(kept.size() + 1);
  out.pairs.push_back({p, q, 0.0});
  out.pairs.insert(out.pairs.end(), kept.begin(), kept.end());
  return out;
}

RegistrationResult register_clouds(const PointCloud& x, const PointCloud& y, double delta,
                                   const RegisterOptions& options) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("register_clouds: clouds must be nonempty");
  }
  if (delta <= 0.0) {
    throw std::invalid_argument("register_clouds: delta must be positive");
  }
  const std::size_t m = x.size();
  const std::size_t n = y.size();

  double min_pairwise = std::numeric_limits<double>::quiet_NaN();
  bool delta_ok = true;
  if (m >= 2 && n >= 2) {
    const DeltaReport report = validate_delta(x, y, delta);
    min_pairwise = report.min_pairwise;
    delta_ok = report.ok;
  } else if (m >= 2) {
    min_pairwise = min_pairwise_distance(x);
  } else if (n >= 2) {
    min_pairwise = min_pairwise_distance(y);
  }
  // A singleton cloud contributes no non-pivot points, so the injectivity
  // bound is vacuous there and delta_ok stays true.

  if (options.strict_delta && !delta_ok) {
    throw DeltaRejection(delta, min_pairwise / 2.0);
  }

  std::vector<PivotSolution> solutions(m * n);
  run_pivot_tasks(x, y, delta, options.parallelism, solutions);

  std::size_t best_flat = 0;
  for (std::size_t f = 1; f < solutions.size(); ++f) {
    if (better(solutions[f], solutions[best_flat])) best_flat = f;
  }
  const PivotSolution best = solutions[best_flat];

  RegistrationResult result;
  result.best = best;
  result.delta_ok = delta_ok;
  result.min_pairwise = min_pairwise;
  result.energy =
      static_cast<long long>(m - 1) * static_cast<long long>(n - 1) - (best.k_total - 1);

  // Matched pairs are evaluated at the plateau midpoint: the arc that opens at
  // the left endpoint sits at distance exactly delta there, where rounding can
  // drop it from the closed-condition scan.
  const double theta_eval = best.theta + 0.5 * (best.plateau_end - best.theta);
  CorrespondenceSet correspondences =
      extract_correspondences(x, y, best.p, best.q, theta_eval, delta);
  result.pairs = std::move(correspondences.pairs);
  result.non_injective = correspondences.non_injective;

  if (options.all_solutions) {
    std::vector<PivotSolution> optima;
    for (std::size_t f = 0; f < solutions.size(); ++f) {
      if (solutions[f].k_total != best.k_total) continue;
      const std::size_t p = f / n;
      const std::size_t q = f % n;
      std::vector<AngleInterval> intervals;
      const int full_count = collect_pivot_intervals(x, y, p, q, delta, intervals);
      for (const SweepOutcome& sweep : sweep_max_plateaus(intervals)) {
        optima.push_back({p, q, sweep.theta, sweep.plateau_end,
                          sweep.arc_overlap + full_count + 1});
      }
    }
    result.all_optima = std::move(optima);
  }
  return result;
}

}  // namespace pcreg
