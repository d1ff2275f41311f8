#include "pcreg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcreg {

namespace {

// Sub-seed streams, so that changing one draw site never shifts another.
constexpr std::uint64_t kLibraryStream = 1;
constexpr std::uint64_t kTrialStream = 2;
constexpr std::uint64_t kSubsetStream = 3;
constexpr std::uint64_t kNoiseStream = 4;
constexpr std::uint64_t kPoolStream = 5;
constexpr std::uint64_t kSharedStream = 6;

void fill_error_stats(ClassificationReport& report) {
  const std::vector<double>& errors = report.angle_errors_deg;
  if (errors.empty()) return;
  double sum = 0.0;
  double max = 0.0;
  for (const double e : errors) {
    sum += e;
    max = std::max(max, e);
  }
  report.mean_deg = sum / static_cast<double>(errors.size());
  report.max_deg = max;
  if (errors.size() > 1) {
    double ss = 0.0;
    for (const double e : errors) {
      const double d = e - report.mean_deg;
      ss += d * d;
    }
    report.std_deg = std::sqrt(ss / static_cast<double>(errors.size() - 1));
  }
}

}  // namespace

double circular_angle_error_deg(double found, double truth) {
  const double d = wrap_angle(found - truth);
  return std::min(d, kTwoPi - d) * 180.0 / kPi;
}

ClassificationOutcome classify(std::span<const PointCloud> library, const PointCloud& query,
                               double delta, unsigned parallelism) {
  if (library.empty()) {
    throw std::invalid_argument("classify: library must be nonempty");
  }
  RegisterOptions options;
  options.parallelism = parallelism;
  ClassificationOutcome outcome;
  int best_k = -1;
  for (std::size_t index = 0; index < library.size(); ++index) {
    const RegistrationResult result = register_clouds(library[index], query, delta, options);
    if (result.best.k_total > best_k) {
      best_k = result.best.k_total;
      outcome.index = index;
      outcome.solution = result.best;
    }
  }
  return outcome;
}

ClassificationReport run_classification_experiment(const ClassificationParams& params) {
  if (params.n_clouds == 0 || params.cloud_size == 0 || params.subset_min == 0 ||
      params.subset_min > params.subset_max || params.subset_max > params.cloud_size ||
      params.delta <= 0.0 || params.sigma < 0.0) {
    throw std::invalid_argument("run_classification_experiment: inconsistent parameters");
  }

  std::vector<PointCloud> library;
  library.reserve(params.n_clouds);
  for (std::size_t i = 0; i < params.n_clouds; ++i) {
    library.push_back(gen_disk_cloud(params.cloud_size, derive_seed(params.seed, kLibraryStream, i)));
  }

  ClassificationReport report;
  report.trials = params.trials;
  std::size_t correct = 0;
  for (std::size_t t = 0; t < params.trials; ++t) {
    SeedStream trial(derive_seed(params.seed, kTrialStream, t));
    const std::size_t target = trial.below(params.n_clouds);
    const std::size_t size =
        params.subset_min + trial.below(params.subset_max - params.subset_min + 1);
    const double theta0 = trial.angle();

    const PointCloud subset =
        random_subset(library[target], size, derive_seed(params.seed, kSubsetStream, t));
    const PointCloud query = add_gaussian_noise(rotate_cloud(subset, theta0), params.sigma,
                                                derive_seed(params.seed, kNoiseStream, t));

    const ClassificationOutcome outcome =
        classify(library, query, params.delta, params.parallelism);
    if (outcome.index == target) {
      ++correct;
      report.angle_errors_deg.push_back(
          circular_angle_error_deg(outcome.solution.theta, wrap_angle(-theta0)));
    }
  }
  report.accuracy =
      params.trials == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(params.trials);
  fill_error_stats(report);
  return report;
}

SubsetSweepReport run_subset_experiment(const SubsetSweepParams& params) {
  for (const std::size_t k : params.k_values) {
    if (k > params.cloud_size) {
      throw std::invalid_argument("run_subset_experiment: k exceeds the cloud size");
    }
  }
  if (params.cloud_size > params.pool_size || params.delta <= 0.0 || params.sigma < 0.0) {
    throw std::invalid_argument("run_subset_experiment: inconsistent parameters");
  }

  SubsetSweepReport report;
  report.k_values = params.k_values;
  report.trials_per_k = params.trials_per_k;
  report.success_rate.reserve(params.k_values.size());
  RegisterOptions options;
  options.parallelism = params.parallelism;

  for (std::size_t ki = 0; ki < params.k_values.size(); ++ki) {
    const std::size_t k = params.k_values[ki];
    std::size_t successes = 0;
    for (std::size_t t = 0; t < params.trials_per_k; ++t) {
      const std::uint64_t run = ki * params.trials_per_k + t;
      const PointCloud pool =
          gen_disk_cloud(params.pool_size, derive_seed(params.seed, kPoolStream, run));
      const SharedSubsetPair pair =
          gen_shared_pair(pool, params.cloud_size, k, derive_seed(params.seed, kSharedStream, run));
      SeedStream trial(derive_seed(params.seed, kTrialStream, run));
      const double theta0 = trial.angle();
      const PointCloud noisy = add_gaussian_noise(rotate_cloud(pair.y, theta0), params.sigma,
                                                  derive_seed(params.seed, kNoiseStream, run));

      const RegistrationResult result = register_clouds(pair.x, noisy, params.delta, options);
      if (circular_angle_error_deg(result.best.theta, wrap_angle(-theta0)) < 1.0) {
        ++successes;
      }
    }
    report.success_rate.push_back(params.trials_per_k == 0
                                      ? 0.0
                                      : static_cast<double>(successes) /
                                            static_cast<double>(params.trials_per_k));
  }
  return report;
}

}  // namespace pcreg
