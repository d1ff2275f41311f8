#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "pcreg/geometry.hpp"

namespace pcreg {

using Seed = std::uint64_t;

/// SplitMix64 finalizer, used to derive independent sub-seeds.
constexpr std::uint64_t split_mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr Seed derive_seed(Seed base, std::uint64_t stream, std::uint64_t index = 0) {
  const Seed mixed = split_mix64(base ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
  return split_mix64(mixed + 0xBF58476D1CE4E5B9ull * (index + 1));
}

/// Deterministic draw source. std::mt19937_64 is pinned bit-exactly by the
/// standard, but the std distributions are not, so every real-valued draw goes
/// through the fixed transforms below: identical seeds give identical clouds
/// on any platform.
class SeedStream {
 public:
  explicit SeedStream(Seed seed) : engine_(seed) {}

  /// 53-bit-mantissa uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform angle in [0, 2*pi).
  double angle() { return uniform01() * kTwoPi; }

  /// Unbiased integer in [0, n) via masked rejection.
  std::uint64_t below(std::uint64_t n);

  /// One Box-Muller pair: two independent Normal(0, sigma^2) draws consuming
  /// exactly two uniforms.
  std::pair<double, double> gaussian_pair(double sigma) {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log1p(-u1));
    const double phase = kTwoPi * u2;
    return {sigma * radius * std::cos(phase), sigma * radius * std::sin(phase)};
  }

 private:
  std::mt19937_64 engine_;
};

/// n samples of (t, sin t) for t uniform on [0, 2*pi], endpoints included.
PointCloud gen_sine(std::size_t n);

/// 1-based inclusive index range into a parameter partition.
struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

/// The ellipse (3 cos t, 2 sin t) sampled on a uniform n-point partition of
/// [0, 2*pi], minus the points in the deleted ranges, plus pure-noise outliers
/// drawn as Normal(0, outlier_sigma^2) pairs.
PointCloud gen_ellipse_partial(std::size_t n, std::span<const IndexRange> deleted_ranges,
                               std::size_t n_outliers, double outlier_sigma, Seed seed);

/// gen_ellipse_partial plus ground-truth bookkeeping: the full curve and the
/// original partition index of each surviving point.
struct EllipseScene {
  PointCloud full;
  PointCloud partial;                  // survivors then outliers
  std::vector<std::size_t> kept;       // partial[s] == full[kept[s]] for s < kept.size()
};

EllipseScene gen_ellipse_scene(std::size_t n, std::span<const IndexRange> deleted_ranges,
                               std::size_t n_outliers, double outlier_sigma, Seed seed);

/// n points uniform on the unit disk (radius = sqrt(u) method), re-drawn on
/// exact coordinate collision.
PointCloud gen_disk_cloud(std::size_t n, Seed seed);

/// Perturbs each coordinate by an independent Normal(0, sigma^2) draw; one
/// Box-Muller pair per point, re-drawn on exact collision. sigma = 0 returns
/// the cloud unchanged.
PointCloud add_gaussian_noise(const PointCloud& cloud, double sigma, Seed seed);

/// Rotates every point about the origin.
PointCloud rotate_cloud(const PointCloud& cloud, double theta);

/// Order-preserving selection of the given indices.
PointCloud take_subset(const PointCloud& cloud, std::span<const std::size_t> indices);

/// k distinct indices drawn uniformly, returned in ascending index order.
PointCloud random_subset(const PointCloud& cloud, std::size_t k, Seed seed);

/// Two size-point subsets of a pool sharing exactly k points. shared_x[m] and
/// shared_y[m] are the positions of the m-th shared pool point inside x and y.
struct SharedSubsetPair {
  PointCloud x;
  PointCloud y;
  std::vector<std::size_t> shared_x;
  std::vector<std::size_t> shared_y;
};

SharedSubsetPair gen_shared_pair(const PointCloud& pool, std::size_t size, std::size_t k,
                                 Seed seed);

}  // namespace pcreg
