#include "pcreg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pcreg {

GridProfile grid_energy(const PointCloud& x, const PointCloud& y, std::size_t p,
                        std::size_t q, double delta, std::size_t grid_points) {
  if (grid_points < 1) {
    throw std::invalid_argument("grid_energy: need at least one grid point");
  }
  GridProfile profile;
  profile.thetas.reserve(grid_points);
  profile.energies.reserve(grid_points);
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double theta = kTwoPi * static_cast<double>(g) / static_cast<double>(grid_points);
    profile.thetas.push_back(theta);
    profile.energies.push_back(energy(x, y, p, q, theta, delta));
  }
  return profile;
}

RegistrationResult brute_force_best(const PointCloud& x, const PointCloud& y, double delta) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("brute_force_best: clouds must be nonempty");
  }
  if (x.size() > kBruteForceLimit || y.size() > kBruteForceLimit) {
    throw std::invalid_argument("brute_force_best: cloud exceeds the size guard");
  }
  if (delta <= 0.0) {
    throw std::invalid_argument("brute_force_best: delta must be positive");
  }
  const std::size_t m = x.size();
  const std::size_t n = y.size();

  bool have_best = false;
  PivotSolution best;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<AngleInterval> intervals;
      (void)collect_pivot_intervals(x, y, p, q, delta, intervals);

      std::vector<double> candidates;
      candidates.reserve(3 * intervals.size() + 1);
      candidates.push_back(0.0);
      for (const AngleInterval& iv : intervals) {
        candidates.push_back(iv.start);
        candidates.push_back(iv.end);
      }
      std::sort(candidates.begin(), candidates.end());
      const std::size_t endpoint_count = candidates.size();
      for (std::size_t c = 0; c + 1 < endpoint_count; ++c) {
        candidates.push_back(0.5 * (candidates[c] + candidates[c + 1]));
      }
      std::sort(candidates.begin(), candidates.end());

      int k_best = 0;
      double theta_best = 0.0;
      for (const double theta : candidates) {
        const int k = count_matches(x, y, p, q, theta, delta) + 1;
        if (k > k_best) {
          k_best = k;
          theta_best = theta;
        }
      }
      const PivotSolution solution{p, q, theta_best, theta_best, k_best};
      const bool wins = !have_best || solution.k_total > best.k_total ||
                        (solution.k_total == best.k_total &&
                         (solution.p < best.p || (solution.p == best.p && solution.q < best.q)));
      if (wins) {
        best = solution;
        have_best = true;
      }
    }
  }

  RegistrationResult result;
  result.best = best;
  result.energy =
      static_cast<long long>(m - 1) * static_cast<long long>(n - 1) - (best.k_total - 1);
  result.min_pairwise = std::numeric_limits<double>::quiet_NaN();
  result.delta_ok = true;
  if (m >= 2 && n >= 2) {
    const DeltaReport report = validate_delta(x, y, delta);
    result.min_pairwise = report.min_pairwise;
    result.delta_ok = report.ok;
  } else if (m >= 2) {
    result.min_pairwise = min_pairwise_distance(x);
  } else if (n >= 2) {
    result.min_pairwise = min_pairwise_distance(y);
  }
  CorrespondenceSet correspondences =
      extract_correspondences(x, y, best.p, best.q, best.theta, delta);
  result.pairs = std::move(correspondences.pairs);
  result.non_injective = correspondences.non_injective;
  return result;
}

}  // namespace pcreg
