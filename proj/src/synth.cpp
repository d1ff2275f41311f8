#include "pcreg/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pcreg {

namespace {

/// Exact-coordinate collision tracker backing the distinctness invariant.
class DistinctSet {
 public:
  bool insert(Point2 p) { return seen_.insert({p.x, p.y}).second; }

 private:
  std::set<std::pair<double, double>> seen_;
};

}  // namespace

std::uint64_t SeedStream::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
  for (;;) {
    const std::uint64_t value = engine_() & mask;
    if (value < n) return value;
  }
}

PointCloud gen_sine(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("gen_sine: need at least 2 samples");
  }
  PointCloud cloud;
  cloud.label = "sine";
  cloud.points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n - 1);
    cloud.points.push_back({t, std::sin(t)});
  }
  return cloud;
}

EllipseScene gen_ellipse_scene(std::size_t n, std::span<const IndexRange> deleted_ranges,
                               std::size_t n_outliers, double outlier_sigma, Seed seed) {
  if (n < 2) {
    throw std::invalid_argument("gen_ellipse_scene: need at least 2 samples");
  }
  if (outlier_sigma < 0.0) {
    throw std::invalid_argument("gen_ellipse_scene: outlier sigma must be nonnegative");
  }
  std::vector<char> deleted(n, 0);
  for (const IndexRange& range : deleted_ranges) {
    if (range.first < 1 || range.last < range.first || range.last > n) {
      throw std::invalid_argument("gen_ellipse_scene: invalid deletion range");
    }
    for (std::size_t k = range.first; k <= range.last; ++k) {
      if (deleted[k - 1]) {
        throw std::invalid_argument("gen_ellipse_scene: overlapping deletion ranges");
      }
      deleted[k - 1] = 1;
    }
  }

  EllipseScene scene;
  scene.full.label = "ellipse";
  scene.partial.label = "ellipse-partial";
  DistinctSet distinct;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n - 1);
    const Point2 point{3.0 * std::cos(t), 2.0 * std::sin(t)};
    scene.full.points.push_back(point);
    if (!deleted[k]) {
      scene.partial.points.push_back(point);
      scene.kept.push_back(k);
      distinct.insert(point);
    }
  }

  SeedStream stream(seed);
  for (std::size_t o = 0; o < n_outliers; ++o) {
    for (;;) {
      const auto [gx, gy] = stream.gaussian_pair(outlier_sigma);
      const Point2 point{gx, gy};
      if (distinct.insert(point)) {
        scene.partial.points.push_back(point);
        break;
      }
    }
  }
  return scene;
}

PointCloud gen_ellipse_partial(std::size_t n, std::span<const IndexRange> deleted_ranges,
                               std::size_t n_outliers, double outlier_sigma, Seed seed) {
  return gen_ellipse_scene(n, deleted_ranges, n_outliers, outlier_sigma, seed).partial;
}

PointCloud gen_disk_cloud(std::size_t n, Seed seed) {
  PointCloud cloud;
  cloud.label = "disk";
  cloud.points.reserve(n);
  SeedStream stream(seed);
  DistinctSet distinct;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      const double radius = std::sqrt(stream.uniform01());
      const double phase = stream.angle();
      const Point2 point{radius * std::cos(phase), radius * std::sin(phase)};
      if (distinct.insert(point)) {
        cloud.points.push_back(point);
        break;
      }
    }
  }
  return cloud;
}

PointCloud add_gaussian_noise(const PointCloud& cloud, double sigma, Seed seed) {
  if (sigma < 0.0) {
    throw std::invalid_argument("add_gaussian_noise: sigma must be nonnegative");
  }
  if (sigma == 0.0) return cloud;
  PointCloud out;
  out.label = cloud.label;
  out.points.reserve(cloud.size());
  SeedStream stream(seed);
  DistinctSet distinct;
  for (const Point2& p : cloud.points) {
    for (;;) {
      const auto [gx, gy] = stream.gaussian_pair(sigma);
      const Point2 noisy{p.x + gx, p.y + gy};
      if (distinct.insert(noisy)) {
        out.points.push_back(noisy);
        break;
      }
    }
  }
  return out;
}

PointCloud rotate_cloud(const PointCloud& cloud, double theta) {
  PointCloud out;
  out.label = cloud.label;
  out.points.reserve(cloud.size());
  for (const Point2& p : cloud.points) {
    out.points.push_back(rotate(p, theta));
  }
  return out;
}

PointCloud take_subset(const PointCloud& cloud, std::span<const std::size_t> indices) {
  PointCloud out;
  out.label = cloud.label;
  out.points.reserve(indices.size());
  for (const std::size_t index : indices) {
    if (index >= cloud.size()) {
      throw std::out_of_range("take_subset: index out of range");
    }
    out.points.push_back(cloud[index]);
  }
  return out;
}

PointCloud random_subset(const PointCloud& cloud, std::size_t k, Seed seed) {
  if (k > cloud.size()) {
    throw std::invalid_argument("random_subset: subset larger than cloud");
  }
  std::vector<std::size_t> indices(cloud.size());
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  SeedStream stream(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + stream.below(indices.size() - i);
    std::swap(indices[i], indices[j]);
  }
  indices.resize(k);
  std::sort(indices.begin(), indices.end());
  return take_subset(cloud, indices);
}

SharedSubsetPair gen_shared_pair(const PointCloud& pool, std::size_t size, std::size_t k,
                                 Seed seed) {
  if (k > size) {
    throw std::invalid_argument("gen_shared_pair: shared count exceeds subset size");
  }
  if (2 * size < k || 2 * size - k > pool.size()) {
    throw std::invalid_argument("gen_shared_pair: pool too small for disjoint remainders");
  }
  std::vector<std::size_t> indices(pool.size());
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  SeedStream stream(seed);
  for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
    const std::size_t j = i + stream.below(indices.size() - i);
    std::swap(indices[i], indices[j]);
  }

  // First k shuffled entries are shared; the next two disjoint blocks fill
  // x and y up to `size`.
  std::vector<std::size_t> x_indices(indices.begin(), indices.begin() + size);
  std::vector<std::size_t> y_indices(indices.begin(), indices.begin() + k);
  y_indices.insert(y_indices.end(), indices.begin() + size, indices.begin() + (2 * size - k));
  std::sort(x_indices.begin(), x_indices.end());
  std::sort(y_indices.begin(), y_indices.end());

  SharedSubsetPair pair;
  pair.x = take_subset(pool, x_indices);
  pair.y = take_subset(pool, y_indices);
  for (std::size_t m = 0; m < k; ++m) {
    const std::size_t pool_index = indices[m];
    const auto in_x = std::lower_bound(x_indices.begin(), x_indices.end(), pool_index);
    const auto in_y = std::lower_bound(y_indices.begin(), y_indices.end(), pool_index);
    pair.shared_x.push_back(static_cast<std::size_t>(in_x - x_indices.begin()));
    pair.shared_y.push_back(static_cast<std::size_t>(in_y - y_indices.begin()));
  }
  return pair;
}

}  // namespace pcreg
