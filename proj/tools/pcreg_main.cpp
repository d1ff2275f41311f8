// pcreg: registers two 2D point clouds by maximizing the matched subset under
// a noise tolerance, using a pivot translation plus an angular interval sweep.
// Subcommands: register, gen (sine|ellipse|disk|pair), bench (classify|subset).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcreg/experiments.hpp"
#include "pcreg/io.hpp"
#include "pcreg/oracle.hpp"
#include "pcreg/registration.hpp"
#include "pcreg/svg.hpp"
#include "pcreg/synth.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDeltaRejected = 2;

void dump_json_file(const std::string& path, const json& doc) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file << doc.dump(2) << '\n';
}

// Ranges like "51-69" or "51:69", 1-based inclusive.
pcreg::IndexRange parse_range(const std::string& text) {
  const std::size_t sep = text.find_first_of("-:");
  if (sep == std::string::npos) {
    throw std::runtime_error("range must look like FIRST-LAST: " + text);
  }
  pcreg::IndexRange range;
  range.first = std::stoull(text.substr(0, sep));
  range.last = std::stoull(text.substr(sep + 1));
  return range;
}

struct RegisterArgs {
  std::string cloud_x;
  std::string cloud_y;
  double delta = 0.0;
  bool strict_delta = false;
  bool all_solutions = false;
  unsigned threads = 0;
  std::string out;
  std::string svg;
};

int run_register(const RegisterArgs& args) {
  const pcreg::PointCloud x = pcreg::read_cloud(args.cloud_x);
  const pcreg::PointCloud y = pcreg::read_cloud(args.cloud_y);

  pcreg::RegisterOptions options;
  options.strict_delta = args.strict_delta;
  options.all_solutions = args.all_solutions;
  options.parallelism = args.threads;

  const auto start = std::chrono::steady_clock::now();
  const pcreg::RegistrationResult result = pcreg::register_clouds(x, y, args.delta, options);
  const auto stop = std::chrono::steady_clock::now();
  const double runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  if (!result.delta_ok) {
    std::cerr << "warning: delta " << args.delta
              << " is not below half the minimum pairwise distance ("
              << result.min_pairwise / 2.0 << "); matches may be non-injective\n";
  }

  std::cout << "pivots (" << result.best.p << ", " << result.best.q << ")  theta "
            << result.best.theta << "  k_total " << result.best.k_total << "  energy "
            << result.energy << "\n";

  if (!args.out.empty()) {
    pcreg::write_result_json(args.out, result, args.delta, runtime_ms);
  }
  if (!args.svg.empty()) {
    const pcreg::PointCloud mapped = pcreg::apply_motion(result.motion(), x, y);
    pcreg::write_overlay_svg(args.svg, x, mapped, result.pairs);
  }
  return kExitOk;
}

struct GenCommon {
  std::uint64_t seed = 0;
  std::string out;
  std::string manifest;
};

json manifest_header(const std::string& kind, std::uint64_t seed) {
  json doc;
  doc["kind"] = kind;
  doc["seed"] = seed;
  return doc;
}

const std::vector<pcreg::IndexRange> kDefaultDeletions = {{51, 69}, {111, 169}, {196, 199}};

struct PairArgs {
  std::string kind = "sine";
  std::size_t n = 200;
  double sigma = 0.01;
  std::optional<double> theta;
  std::size_t outliers = 50;
  double outlier_sigma = 2.0;
  std::vector<std::string> deletions;
  std::size_t subset_size = 0;  // 0 = full cloud (disk kind)
  std::uint64_t seed = 0;
  std::string out_x;
  std::string out_y;
  std::string manifest;
};

int run_gen_pair(const PairArgs& args) {
  const pcreg::Seed seed = args.seed;
  const double theta0 =
      args.theta ? *args.theta : pcreg::SeedStream(pcreg::derive_seed(seed, 1)).angle();
  const pcreg::Seed noise_seed = pcreg::derive_seed(seed, 2);
  const pcreg::Seed scene_seed = pcreg::derive_seed(seed, 3);

  pcreg::PointCloud x;
  pcreg::PointCloud y_clean;
  std::vector<std::pair<std::size_t, std::size_t>> correspondences;
  json manifest = manifest_header("pair-" + args.kind, seed);

  if (args.kind == "sine") {
    x = pcreg::gen_sine(args.n);
    y_clean = x;
    for (std::size_t i = 0; i < x.size(); ++i) correspondences.emplace_back(i, i);
  } else if (args.kind == "ellipse") {
    std::vector<pcreg::IndexRange> ranges = kDefaultDeletions;
    if (!args.deletions.empty()) {
      ranges.clear();
      for (const std::string& text : args.deletions) ranges.push_back(parse_range(text));
    }
    const pcreg::EllipseScene scene =
        pcreg::gen_ellipse_scene(args.n, ranges, args.outliers, args.outlier_sigma, scene_seed);
    x = scene.full;
    y_clean = scene.partial;
    for (std::size_t s = 0; s < scene.kept.size(); ++s) {
      correspondences.emplace_back(scene.kept[s], s);
    }
    json deleted = json::array();
    for (const pcreg::IndexRange& r : ranges) deleted.push_back(json::array({r.first, r.last}));
    manifest["deleted_ranges"] = std::move(deleted);
    manifest["n_outliers"] = args.outliers;
    manifest["outlier_sigma"] = args.outlier_sigma;
  } else if (args.kind == "disk") {
    x = pcreg::gen_disk_cloud(args.n, scene_seed);
    const std::size_t size = args.subset_size == 0 ? args.n : args.subset_size;
    // Draw the index set the same way random_subset does, keeping the map for
    // the manifest.
    std::vector<std::size_t> picked(x.size());
    for (std::size_t i = 0; i < picked.size(); ++i) picked[i] = i;
    pcreg::SeedStream stream(pcreg::derive_seed(seed, 4));
    for (std::size_t i = 0; i < size && i < picked.size(); ++i) {
      const std::size_t j = i + stream.below(picked.size() - i);
      std::swap(picked[i], picked[j]);
    }
    picked.resize(size);
    std::sort(picked.begin(), picked.end());
    y_clean = pcreg::take_subset(x, picked);
    for (std::size_t s = 0; s < picked.size(); ++s) correspondences.emplace_back(picked[s], s);
    manifest["subset_size"] = y_clean.size();
  } else {
    throw std::runtime_error("unknown pair kind: " + args.kind);
  }

  const pcreg::PointCloud y =
      pcreg::add_gaussian_noise(pcreg::rotate_cloud(y_clean, theta0), args.sigma, noise_seed);

  pcreg::write_cloud(args.out_x, x);
  pcreg::write_cloud(args.out_y, y);

  manifest["n"] = args.n;
  manifest["sigma"] = args.sigma;
  manifest["theta_applied"] = theta0;
  manifest["theta_expected"] = pcreg::wrap_angle(-theta0);
  json corr = json::array();
  for (const auto& [xi, yi] : correspondences) corr.push_back(json::array({xi, yi}));
  manifest["correspondences"] = std::move(corr);
  if (!args.manifest.empty()) dump_json_file(args.manifest, manifest);
  return kExitOk;
}

struct BenchClassifyArgs {
  pcreg::ClassificationParams params;
  std::string out;
  std::string plot;
};

int run_bench_classify(const BenchClassifyArgs& args) {
  const pcreg::ClassificationReport report = pcreg::run_classification_experiment(args.params);
  std::cout << "classification: trials " << report.trials << "  accuracy " << report.accuracy
            << "  mean angle error " << report.mean_deg << " deg (max " << report.max_deg
            << ")\n";
  if (!args.out.empty()) pcreg::write_classification_report_json(args.out, report);
  if (!args.plot.empty()) {
    pcreg::write_histogram_svg(args.plot, report.angle_errors_deg, 20, "angle error (deg)");
  }
  return kExitOk;
}

struct BenchSubsetArgs {
  pcreg::SubsetSweepParams params;
  std::string out;
  std::string plot;
};

int run_bench_subset(const BenchSubsetArgs& args) {
  const pcreg::SubsetSweepReport report = pcreg::run_subset_experiment(args.params);
  for (std::size_t i = 0; i < report.k_values.size(); ++i) {
    std::cout << "k=" << report.k_values[i] << "  success rate " << report.success_rate[i]
              << "\n";
  }
  if (!args.out.empty()) pcreg::write_subset_report_json(args.out, report);
  if (!args.plot.empty()) {
    pcreg::write_rate_svg(args.plot, report.k_values, report.success_rate);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal-common-subset registration of 2D point clouds"};
  app.require_subcommand(1);

  RegisterArgs reg;
  CLI::App* cmd_register = app.add_subcommand("register", "Register two clouds");
  cmd_register->add_option("--cloud-x", reg.cloud_x, "First cloud file")->required();
  cmd_register->add_option("--cloud-y", reg.cloud_y, "Second cloud file")->required();
  cmd_register->add_option("--delta", reg.delta, "Noise tolerance")->required();
  cmd_register->add_flag("--strict-delta", reg.strict_delta,
                         "Reject when delta >= half the minimum pairwise distance");
  cmd_register->add_flag("--all-solutions", reg.all_solutions,
                         "Also report every optimum-attaining pivot solution");
  cmd_register->add_option("--threads", reg.threads, "Worker count (0 = hardware)");
  cmd_register->add_option("--out", reg.out, "Result JSON path");
  cmd_register->add_option("--svg", reg.svg, "Overlay plot path");

  CLI::App* cmd_gen = app.add_subcommand("gen", "Generate synthetic clouds");
  cmd_gen->require_subcommand(1);

  GenCommon gen_sine_args;
  std::size_t sine_n = 200;
  CLI::App* gen_sine_cmd = cmd_gen->add_subcommand("sine", "Sine curve samples");
  gen_sine_cmd->add_option("--n", sine_n, "Sample count");
  gen_sine_cmd->add_option("--seed", gen_sine_args.seed, "Seed (recorded only)");
  gen_sine_cmd->add_option("--out", gen_sine_args.out, "Cloud file")->required();
  gen_sine_cmd->add_option("--manifest", gen_sine_args.manifest, "Manifest JSON path");

  GenCommon gen_ellipse_args;
  std::size_t ellipse_n = 200;
  std::size_t ellipse_outliers = 50;
  double ellipse_outlier_sigma = 2.0;
  std::vector<std::string> ellipse_deletions;
  CLI::App* gen_ellipse_cmd =
      cmd_gen->add_subcommand("ellipse", "Partial ellipse plus outliers");
  gen_ellipse_cmd->add_option("--n", ellipse_n, "Partition size");
  gen_ellipse_cmd->add_option("--delete", ellipse_deletions,
                              "1-based inclusive range FIRST-LAST (repeatable; default: the "
                              "built-in three ranges)");
  gen_ellipse_cmd->add_option("--outliers", ellipse_outliers, "Outlier count");
  gen_ellipse_cmd->add_option("--outlier-sigma", ellipse_outlier_sigma, "Outlier sigma");
  gen_ellipse_cmd->add_option("--seed", gen_ellipse_args.seed, "Seed");
  gen_ellipse_cmd->add_option("--out", gen_ellipse_args.out, "Cloud file")->required();
  gen_ellipse_cmd->add_option("--manifest", gen_ellipse_args.manifest, "Manifest JSON path");

  GenCommon gen_disk_args;
  std::size_t disk_n = 150;
  CLI::App* gen_disk_cmd = cmd_gen->add_subcommand("disk", "Uniform unit-disk cloud");
  gen_disk_cmd->add_option("--n", disk_n, "Point count");
  gen_disk_cmd->add_option("--seed", gen_disk_args.seed, "Seed");
  gen_disk_cmd->add_option("--out", gen_disk_args.out, "Cloud file")->required();
  gen_disk_cmd->add_option("--manifest", gen_disk_args.manifest, "Manifest JSON path");

  PairArgs pair;
  CLI::App* gen_pair_cmd =
      cmd_gen->add_subcommand("pair", "Registration-ready pair with ground truth");
  gen_pair_cmd->add_option("--kind", pair.kind, "sine, ellipse or disk")
      ->check(CLI::IsMember({"sine", "ellipse", "disk"}));
  gen_pair_cmd->add_option("--n", pair.n, "Base cloud size");
  gen_pair_cmd->add_option("--sigma", pair.sigma, "Noise sigma applied to Y");
  double pair_theta = 0.0;
  CLI::Option* theta_opt =
      gen_pair_cmd->add_option("--theta", pair_theta, "Applied rotation (default: random)");
  gen_pair_cmd->add_option("--outliers", pair.outliers, "Outlier count (ellipse)");
  gen_pair_cmd->add_option("--outlier-sigma", pair.outlier_sigma, "Outlier sigma (ellipse)");
  gen_pair_cmd->add_option("--delete", pair.deletions, "Deletion range (ellipse, repeatable)");
  gen_pair_cmd->add_option("--subset-size", pair.subset_size, "Subset size (disk; 0 = full)");
  gen_pair_cmd->add_option("--seed", pair.seed, "Seed");
  gen_pair_cmd->add_option("--out-x", pair.out_x, "X cloud file")->required();
  gen_pair_cmd->add_option("--out-y", pair.out_y, "Y cloud file")->required();
  gen_pair_cmd->add_option("--manifest", pair.manifest, "Manifest JSON path");

  BenchClassifyArgs classify_args;
  CLI::App* bench = app.add_subcommand("bench", "Reproduce the experiments");
  bench->require_subcommand(1);
  CLI::App* bench_classify = bench->add_subcommand("classify", "Library classification");
  bench_classify->add_option("--clouds", classify_args.params.n_clouds, "Library size");
  bench_classify->add_option("--cloud-size", classify_args.params.cloud_size, "Points per cloud");
  bench_classify->add_option("--subset-min", classify_args.params.subset_min, "Smallest subset");
  bench_classify->add_option("--subset-max", classify_args.params.subset_max, "Largest subset");
  bench_classify->add_option("--sigma", classify_args.params.sigma, "Noise sigma");
  bench_classify->add_option("--delta", classify_args.params.delta, "Noise tolerance");
  bench_classify->add_option("--trials", classify_args.params.trials, "Trial count");
  bench_classify->add_option("--seed", classify_args.params.seed, "Seed");
  bench_classify->add_option("--threads", classify_args.params.parallelism, "Workers");
  bench_classify->add_option("--out", classify_args.out, "Report JSON path");
  bench_classify->add_option("--plot", classify_args.plot, "Angle-error histogram SVG");

  BenchSubsetArgs subset_args;
  std::vector<std::size_t> subset_k;
  CLI::App* bench_subset = bench->add_subcommand("subset", "Success rate vs shared-subset size");
  bench_subset->add_option("--pool", subset_args.params.pool_size, "Pool cloud size");
  bench_subset->add_option("--cloud-size", subset_args.params.cloud_size, "Points per subset");
  bench_subset->add_option("--k", subset_k, "Shared-point counts (repeatable or comma list)")
      ->delimiter(',');
  bench_subset->add_option("--trials", subset_args.params.trials_per_k, "Trials per k");
  bench_subset->add_option("--sigma", subset_args.params.sigma, "Noise sigma");
  bench_subset->add_option("--delta", subset_args.params.delta, "Noise tolerance");
  bench_subset->add_option("--seed", subset_args.params.seed, "Seed");
  bench_subset->add_option("--threads", subset_args.params.parallelism, "Workers");
  bench_subset->add_option("--out", subset_args.out, "Report JSON path");
  bench_subset->add_option("--plot", subset_args.plot, "Rate chart SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (cmd_register->parsed()) return run_register(reg);
    if (gen_sine_cmd->parsed()) {
      pcreg::write_cloud(gen_sine_args.out, pcreg::gen_sine(sine_n));
      if (!gen_sine_args.manifest.empty()) {
        json manifest = manifest_header("sine", gen_sine_args.seed);
        manifest["n"] = sine_n;
        dump_json_file(gen_sine_args.manifest, manifest);
      }
      return kExitOk;
    }
    if (gen_ellipse_cmd->parsed()) {
      std::vector<pcreg::IndexRange> ranges = kDefaultDeletions;
      if (!ellipse_deletions.empty()) {
        ranges.clear();
        for (const std::string& text : ellipse_deletions) ranges.push_back(parse_range(text));
      }
      pcreg::write_cloud(gen_ellipse_args.out,
                         pcreg::gen_ellipse_partial(ellipse_n, ranges, ellipse_outliers,
                                                    ellipse_outlier_sigma,
                                                    gen_ellipse_args.seed));
      if (!gen_ellipse_args.manifest.empty()) {
        json manifest = manifest_header("ellipse", gen_ellipse_args.seed);
        manifest["n"] = ellipse_n;
        manifest["n_outliers"] = ellipse_outliers;
        manifest["outlier_sigma"] = ellipse_outlier_sigma;
        json deleted = json::array();
        for (const pcreg::IndexRange& r : ranges) {
          deleted.push_back(json::array({r.first, r.last}));
        }
        manifest["deleted_ranges"] = std::move(deleted);
        dump_json_file(gen_ellipse_args.manifest, manifest);
      }
      return kExitOk;
    }
    if (gen_disk_cmd->parsed()) {
      pcreg::write_cloud(gen_disk_args.out, pcreg::gen_disk_cloud(disk_n, gen_disk_args.seed));
      if (!gen_disk_args.manifest.empty()) {
        json manifest = manifest_header("disk", gen_disk_args.seed);
        manifest["n"] = disk_n;
        dump_json_file(gen_disk_args.manifest, manifest);
      }
      return kExitOk;
    }
    if (gen_pair_cmd->parsed()) {
      if (theta_opt->count() > 0) pair.theta = pair_theta;
      return run_gen_pair(pair);
    }
    if (bench_classify->parsed()) return run_bench_classify(classify_args);
    if (bench_subset->parsed()) {
      if (!subset_k.empty()) subset_args.params.k_values = subset_k;
      return run_bench_subset(subset_args);
    }
  } catch (const pcreg::DeltaRejection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDeltaRejected;
  } catch (const pcreg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
