// Acceptance suite: runs each criterion at its stated tolerance and prints one
// pass/fail line per criterion. `--criterion N` runs a single one; no
// arguments runs all. Exit code is the number of failed criteria.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pcreg/experiments.hpp"
#include "pcreg/oracle.hpp"
#include "pcreg/registration.hpp"
#include "pcreg/synth.hpp"

using namespace pcreg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double log_uniform(SeedStream& stream, double lo, double hi) {
  return std::exp(std::log(lo) + stream.uniform01() * (std::log(hi) - std::log(lo)));
}

PointCloud triangle_cloud() {
  const double side = 2.0 * std::sqrt(3.0);
  PointCloud cloud;
  cloud.points = {{0.0, 0.0}, {side, 0.0}, {side / 2.0, side * std::sqrt(3.0) / 2.0}};
  return cloud;
}

PointCloud segment_cloud() {
  const double side = 2.0 * std::sqrt(3.0);
  PointCloud cloud;
  cloud.points = {{0.0, 0.0}, {side, 0.0}};
  return cloud;
}

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool identical_results(const RegistrationResult& a, const RegistrationResult& b) {
  if (a.best.p != b.best.p || a.best.q != b.best.q) return false;
  if (!same_bits(a.best.theta, b.best.theta)) return false;
  if (!same_bits(a.best.plateau_end, b.best.plateau_end)) return false;
  if (a.best.k_total != b.best.k_total || a.energy != b.energy) return false;
  if (a.delta_ok != b.delta_ok || a.non_injective != b.non_injective) return false;
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t k = 0; k < a.pairs.size(); ++k) {
    if (a.pairs[k].i != b.pairs[k].i || a.pairs[k].j != b.pairs[k].j ||
        !same_bits(a.pairs[k].distance, b.pairs[k].distance)) {
      return false;
    }
  }
  return true;
}

// --- criterion 1: oracle equivalence on 500 random instances -----------------

bool criterion1(std::string& detail) {
  const auto start = Clock::now();
  std::size_t agreements = 0;
  const std::size_t instances = 500;
  for (std::size_t i = 0; i < instances; ++i) {
    SeedStream stream(derive_seed(42001, 3, i));
    const PointCloud x = gen_disk_cloud(2 + stream.below(11), derive_seed(42001, 1, i));
    const PointCloud y = gen_disk_cloud(2 + stream.below(11), derive_seed(42001, 2, i));
    const double delta = log_uniform(stream, 1e-3, 1.0);
    const RegistrationResult fast = register_clouds(x, y, delta);
    const RegistrationResult exact = brute_force_best(x, y, delta);
    if (fast.best.k_total == exact.best.k_total && fast.energy == exact.energy) {
      ++agreements;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream out;
  out << agreements << "/" << instances << " instances agree exactly, " << elapsed << " s";
  detail = out.str();
  return agreements == instances && elapsed < 120.0;
}

// --- criterion 2: energy-count identity -------------------------------------------

bool criterion2(std::string& detail) {
  const auto start = Clock::now();
  std::size_t holds = 0;
  const std::size_t tuples = 1000;
  for (std::size_t i = 0; i < tuples; ++i) {
    SeedStream stream(derive_seed(42002, 3, i));
    const PointCloud x = gen_disk_cloud(2 + stream.below(11), derive_seed(42002, 1, i));
    const PointCloud y = gen_disk_cloud(2 + stream.below(11), derive_seed(42002, 2, i));
    const std::size_t p = stream.below(x.size());
    const std::size_t q = stream.below(y.size());
    const double theta = stream.angle();
    const double delta = log_uniform(stream, 1e-3, 1.0);
    const long long expected =
        static_cast<long long>(x.size() - 1) * static_cast<long long>(y.size() - 1);
    if (energy(x, y, p, q, theta, delta) + count_matches(x, y, p, q, theta, delta) ==
        expected) {
      ++holds;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream out;
  out << holds << "/" << tuples << " tuples satisfy E + K = (M-1)(N-1), " << elapsed << " s";
  detail = out.str();
  return holds == tuples && elapsed < 30.0;
}

// --- criterion 3: triangle/segment counterexample ----------------------------

bool criterion3(std::string& detail) {
  const auto start = Clock::now();
  const PointCloud triangle = triangle_cloud();
  const PointCloud segment = segment_cloud();

  const RegistrationResult loose = register_clouds(triangle, segment, 2.0);
  const bool loose_ok = loose.energy == 0 && loose.non_injective;

  const RegistrationResult tight = register_clouds(triangle, segment, 1.0);
  const bool tight_ok = tight.energy == 1 && tight.best.k_total == 2 && !tight.non_injective;

  const double elapsed = seconds_since(start);
  std::ostringstream out;
  out << "delta=2: energy " << loose.energy << ", flag " << loose.non_injective
      << "; delta=1: energy " << tight.energy << ", k_total " << tight.best.k_total
      << ", flag " << tight.non_injective << "; " << elapsed << " s";
  detail = out.str();
  return loose_ok && tight_ok && elapsed < 1.0;
}

// --- criterion 4: sine experiment --------------------------------------------

bool criterion4(std::string& detail) {
  const auto start = Clock::now();
  const PointCloud x = gen_sine(200);
  const double applied = 2.0;
  const double truth = wrap_angle(-applied);
  bool angles_ok = true;
  int min_k = 1 << 30;
  std::ostringstream ks;
  for (std::uint64_t seed_index = 0; seed_index < 10; ++seed_index) {
    const PointCloud y = add_gaussian_noise(rotate_cloud(x, applied), 0.01,
                                            derive_seed(42004, 1, seed_index));
    const RegistrationResult result = register_clouds(x, y, 0.01);
    const double error = circular_angle_error_deg(result.best.theta, truth);
    if (error >= 1.0) angles_ok = false;
    min_k = std::min(min_k, result.best.k_total);
    ks << (seed_index ? " " : "") << result.best.k_total;
  }
  const double elapsed = seconds_since(start);
  const bool counts_ok = min_k >= 150;
  std::ostringstream out;
  out << "angle errors all < 1 deg: " << (angles_ok ? "yes" : "no")
      << "; k_total per seed: " << ks.str() << " (required >= 150); " << elapsed << " s";
  detail = out.str();
  return angles_ok && counts_ok && elapsed < 180.0;
}

// --- criterion 5: ellipse experiment ------------------------------------------

bool criterion5(std::string& detail) {
  const auto start = Clock::now();
  const std::vector<IndexRange> deletions = {{51, 69}, {111, 169}, {196, 199}};
  bool angles_ok = true;
  std::size_t min_pairs = static_cast<std::size_t>(-1);
  std::ostringstream sizes;
  for (std::uint64_t seed_index = 0; seed_index < 10; ++seed_index) {
    const EllipseScene scene =
        gen_ellipse_scene(200, deletions, 50, 2.0, derive_seed(42005, 1, seed_index));
    SeedStream stream(derive_seed(42005, 2, seed_index));
    const double applied = stream.angle();
    const PointCloud y = add_gaussian_noise(rotate_cloud(scene.partial, applied), 0.01,
                                            derive_seed(42005, 3, seed_index));
    const RegistrationResult result = register_clouds(scene.full, y, 0.01);
    const double error = circular_angle_error_deg(result.best.theta, wrap_angle(-applied));
    if (error >= 1.0) angles_ok = false;
    min_pairs = std::min(min_pairs, result.pairs.size());
    sizes << (seed_index ? " " : "") << result.pairs.size();
  }
  const double elapsed = seconds_since(start);
  const bool pairs_ok = min_pairs >= 100;
  std::ostringstream out;
  out << "angle errors all < 1 deg: " << (angles_ok ? "yes" : "no")
      << "; matched pairs per seed: " << sizes.str() << " (required >= 100 of 118); "
      << elapsed << " s";
  detail = out.str();
  return angles_ok && pairs_ok && elapsed < 180.0;
}

// --- criterion 6: classification ----------------------------------------------

bool criterion6(std::string& detail) {
  const auto start = Clock::now();
  ClassificationParams params;
  params.n_clouds = 10;
  params.cloud_size = 60;
  params.subset_min = 30;
  params.subset_max = 60;
  params.sigma = 0.01;
  params.delta = 0.01;
  params.trials = 10;
  params.seed = 42006;
  const ClassificationReport report = run_classification_experiment(params);
  const double elapsed = seconds_since(start);

  std::ostringstream out;
  out << "accuracy " << report.accuracy << " (required 1.0); mean angle error "
      << report.mean_deg << " deg (required < 0.1), max " << report.max_deg << "; " << elapsed
      << " s";

  const char* full_scale = std::getenv("PCREG_FULL_SCALE");
  bool full_ok = true;
  if (full_scale != nullptr && std::strcmp(full_scale, "0") != 0) {
    ClassificationParams full_params;
    full_params.seed = 42106;
    const ClassificationReport full = run_classification_experiment(full_params);
    full_ok = full.accuracy == 1.0;
    out << "; full scale: accuracy " << full.accuracy << ", mean " << full.mean_deg
        << " deg (" << full.mean_deg * kPi / 180.0 << " rad), std "
        << full.std_deg * kPi / 180.0 << " rad, max " << full.max_deg * kPi / 180.0 << " rad";
  }
  detail = out.str();
  return report.accuracy == 1.0 && report.mean_deg < 0.1 && full_ok && elapsed < 300.0;
}

// --- criterion 7: subset-size sweep --------------------------------------------

bool criterion7(std::string& detail) {
  const auto start = Clock::now();
  SubsetSweepParams params;
  params.pool_size = 120;
  params.cloud_size = 60;
  params.k_values = {4, 12, 24, 32};
  params.trials_per_k = 10;
  params.sigma = 0.01;
  params.delta = 0.01;
  params.seed = 42007;
  const SubsetSweepReport report = run_subset_experiment(params);
  const double elapsed = seconds_since(start);

  const double rate_low = report.success_rate.front();
  const double rate_high = report.success_rate.back();
  std::ostringstream out;
  out << "rates:";
  for (std::size_t i = 0; i < report.k_values.size(); ++i) {
    out << " k=" << report.k_values[i] << ":" << report.success_rate[i];
  }
  out << " (need rate(32) >= 0.9, rate(4) <= 0.5, monotone ends); " << elapsed << " s";
  detail = out.str();
  return rate_high >= 0.9 && rate_low <= 0.5 && rate_high > rate_low && elapsed < 600.0;
}

// --- criterion 8: determinism under parallelism --------------------------------

bool criterion8(std::string& detail) {
  const auto start = Clock::now();
  std::size_t identical = 0;
  const std::size_t instances = 20;
  for (std::size_t i = 0; i < instances; ++i) {
    SeedStream stream(derive_seed(42008, 3, i));
    const PointCloud x = gen_disk_cloud(4 + stream.below(10), derive_seed(42008, 1, i));
    const PointCloud y = gen_disk_cloud(4 + stream.below(10), derive_seed(42008, 2, i));
    const double delta = log_uniform(stream, 1e-2, 0.5);
    RegisterOptions one, two, eight;
    one.parallelism = 1;
    two.parallelism = 2;
    eight.parallelism = 8;
    const RegistrationResult a = register_clouds(x, y, delta, one);
    const RegistrationResult b = register_clouds(x, y, delta, two);
    const RegistrationResult c = register_clouds(x, y, delta, eight);
    if (identical_results(a, b) && identical_results(a, c)) ++identical;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream out;
  out << identical << "/" << instances << " instances bit-identical across 1/2/8 workers, "
      << elapsed << " s";
  detail = out.str();
  return identical == instances;
}

// --- criterion 9: performance vs the naive grid --------------------------------

bool criterion9(std::string& detail) {
  const PointCloud x60 = gen_disk_cloud(60, 42009);
  const PointCloud y60 = gen_disk_cloud(60, 42010);
  const double delta = 0.01;

  RegisterOptions single;
  single.parallelism = 1;
  const auto sweep_start = Clock::now();
  const RegistrationResult fast = register_clouds(x60, y60, delta, single);
  const double sweep_seconds = seconds_since(sweep_start);

  const auto naive_start = Clock::now();
  long long naive_best = static_cast<long long>(x60.size() - 1) * (y60.size() - 1);
  for (std::size_t p = 0; p < x60.size(); ++p) {
    for (std::size_t q = 0; q < y60.size(); ++q) {
      const GridProfile profile = grid_energy(x60, y60, p, q, delta, 100);
      for (const long long e : profile.energies) naive_best = std::min(naive_best, e);
    }
  }
  const double naive_seconds = seconds_since(naive_start);

  const PointCloud x150 = gen_disk_cloud(150, 42011);
  const PointCloud y150 = gen_disk_cloud(150, 42012);
  const auto large_start = Clock::now();
  const RegistrationResult large = register_clouds(x150, y150, delta, single);
  const double large_seconds = seconds_since(large_start);

  std::ostringstream out;
  out << "sweep " << sweep_seconds << " s vs naive G=100 grid " << naive_seconds << " s ("
      << naive_seconds / sweep_seconds << "x, required >= 5x); sweep energy " << fast.energy
      << " <= grid best " << naive_best << "; 150x150 single-worker " << large_seconds
      << " s (required < 300 s, k_total " << large.best.k_total << ")";
  detail = out.str();
  return naive_seconds >= 5.0 * sweep_seconds && fast.energy <= naive_best &&
         large_seconds < 300.0;
}

// --- criterion 10: injectivity under valid delta ------------------------------------------

bool criterion10(std::string& detail) {
  const auto start = Clock::now();
  std::size_t flags = 0;
  const std::size_t instances = 200;
  for (std::size_t i = 0; i < instances; ++i) {
    SeedStream stream(derive_seed(42010, 3, i));
    const PointCloud x = gen_disk_cloud(3 + stream.below(8), derive_seed(42010, 1, i));
    const PointCloud y = gen_disk_cloud(3 + stream.below(8), derive_seed(42010, 2, i));
    const DeltaReport report = validate_delta(x, y, 1e-12);
    const double delta =
        0.98 * (report.min_pairwise / 2.0) * (0.02 + 0.98 * stream.uniform01());
    const RegistrationResult result = register_clouds(x, y, delta);
    if (result.non_injective) ++flags;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream out;
  out << flags << " non-injectivity flags over " << instances
      << " instances with delta < Delta/2 (required 0), " << elapsed << " s";
  detail = out.str();
  return flags == 0;
}

struct Criterion {
  int id;
  const char* name;
  bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence", criterion1},
    {2, "energy-count identity", criterion2},
    {3, "counterexample reproduction", criterion3},
    {4, "sine experiment", criterion4},
    {5, "ellipse experiment", criterion5},
    {6, "classification", criterion6},
    {7, "subset-size sweep", criterion7},
    {8, "determinism under parallelism", criterion8},
    {9, "performance vs naive baseline", criterion9},
    {10, "injectivity under valid delta", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc) {
      selected = std::atoi(argv[a + 1]);
      ++a;
    }
  }

  int failures = 0;
  for (const Criterion& criterion : kCriteria) {
    if (selected != 0 && criterion.id != selected) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " C" << criterion.id << " " << criterion.name
              << ": " << detail << "\n";
    if (!ok) ++failures;
  }
  return failures;
}
