#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pcreg/registration.hpp"
#include "pcreg/synth.hpp"

namespace pcreg {

/// Circular distance between two angles, in degrees, in [0, 180].
double circular_angle_error_deg(double found, double truth);

struct ClassificationOutcome {
  std::size_t index = 0;
  PivotSolution solution;
};

/// Registers each library cloud against the query and returns the index with
/// the highest match count (ties to the smallest index). The library cloud is
/// passed as X so the recovered angle is the negative of the rotation applied
/// to the query.
ClassificationOutcome classify(std::span<const PointCloud> library, const PointCloud& query,
                               double delta, unsigned parallelism = 0);

struct ClassificationParams {
  std::size_t n_clouds = 50;
  std::size_t cloud_size = 150;
  std::size_t subset_min = 75;
  std::size_t subset_max = 150;
  double sigma = 0.01;
  double delta = 0.01;
  std::size_t trials = 50;
  Seed seed = 0;
  unsigned parallelism = 0;
};

/// Per-trial angle errors are recorded only for correctly classified trials,
/// measured against the negated applied rotation.
struct ClassificationReport {
  std::size_t trials = 0;
  double accuracy = 0.0;
  std::vector<double> angle_errors_deg;
  double mean_deg = 0.0;
  double std_deg = 0.0;
  double max_deg = 0.0;
};

ClassificationReport run_classification_experiment(const ClassificationParams& params);

struct SubsetSweepParams {
  std::size_t pool_size = 300;
  std::size_t cloud_size = 150;
  std::vector<std::size_t> k_values = {10, 20, 30, 40, 50, 70, 80, 100, 150};
  std::size_t trials_per_k = 20;
  double sigma = 0.01;
  double delta = 0.01;
  Seed seed = 0;
  unsigned parallelism = 0;
};

struct SubsetSweepReport {
  std::vector<std::size_t> k_values;
  std::vector<double> success_rate;  // aligned with k_values
  std::size_t trials_per_k = 0;
};

/// Success means the recovered angle is within one degree of the negated
/// applied rotation.
SubsetSweepReport run_subset_experiment(const SubsetSweepParams& params);

}  // namespace pcreg
