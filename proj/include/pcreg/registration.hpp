#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pcreg/geometry.hpp"
#include "pcreg/intervals.hpp"

namespace pcreg {

/// Raised when strict delta validation rejects a registration request.
struct DeltaRejection : std::runtime_error {
  DeltaRejection(double delta, double half_min_distance);
  double delta;
  double half_min_distance;  // Delta / 2 of the offending cloud pair
};

/// Best rotation found for one fixed pivot pair. k_total counts the matched
/// subset including the pivot pair itself; [theta, plateau_end] is the plateau
/// on which the match count is attained.
struct PivotSolution {
  std::size_t p = 0;
  std::size_t q = 0;
  double theta = 0.0;
  double plateau_end = 0.0;
  int k_total = 0;
};

struct RegistrationResult {
  PivotSolution best;
  std::vector<MatchPair> pairs;  // pivot pair first, then (i, j) ascending
  long long energy = 0;          // (M-1)(N-1) - (k_total - 1)
  bool delta_ok = false;
  double min_pairwise = 0.0;  // NaN when neither cloud has two points
  bool non_injective = false;
  std::optional<std::vector<PivotSolution>> all_optima;

  RigidMotion motion() const { return {wrap_angle(best.theta), best.p, best.q}; }
};

struct RegisterOptions {
  bool strict_delta = false;
  bool all_solutions = false;
  unsigned parallelism = 0;  // 0 = hardware concurrency
};

/// Number of non-pivot pairs within delta after pivot translation and rotation
/// by theta: K_{p,q}(theta). Direct O(MN) scan, independent of the interval
/// machinery.
int count_matches(const PointCloud& x, const PointCloud& y, std::size_t p, std::size_t q,
                  double theta, double delta);

/// Number of non-pivot pairs strictly farther than delta. Evaluated as its own
/// Heaviside sum; equals (M-1)(N-1) - count_matches for every input.
long long energy(const PointCloud& x, const PointCloud& y, std::size_t p, std::size_t q,
                 double theta, double delta);

/// Feasibility intervals of every non-pivot pair, reduced mod 2*pi, appended
/// to `intervals`. Returns the number of always-matching (Full) pairs, which
/// the sweep cannot see and the caller must re-add to the count.
int collect_pivot_intervals(const PointCloud& x, const PointCloud& y, std::size_t p,
                            std::size_t q, double delta,
                            std::vector<AngleInterval>& intervals);

/// Solves one pivot pair: builds the interval family, sweeps it, and re-adds
/// the Full baseline. k_total = arc overlap + Full count + 1 (the pivot pair).
PivotSolution solve_pivot(const PointCloud& x, const PointCloud& y, std::size_t p,
                          std::size_t q, double delta);

struct CorrespondenceSet {
  std::vector<MatchPair> pairs;
  bool non_injective = false;
};

/// Materializes the matched pairs at a given configuration: the pivot pair
/// (distance 0) plus every non-pivot pair within delta. If some index repeats
/// (possible when delta >= Delta/2), pairs are greedily filtered by ascending
/// distance so each i and j appears at most once, and the flag is raised.
CorrespondenceSet extract_correspondences(const PointCloud& x, const PointCloud& y,
                                          std::size_t p, std::size_t q, double theta,
                                          double delta);

/// Full pipeline: solves every pivot pair, picks the maximum k_total with ties
/// broken by lexicographically smallest (p, q, theta), and extracts the
/// matched pairs. The pivot loop is data-parallel; results do not depend on
/// the worker count.
RegistrationResult register_clouds(const PointCloud& x, const PointCloud& y, double delta,
                                   const RegisterOptions& options = {});

}  // namespace pcreg
