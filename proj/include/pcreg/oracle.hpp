#pragma once

#include <cstddef>
#include <vector>

#include "pcreg/registration.hpp"

namespace pcreg {

/// Energies of one pivot pair sampled on a uniform angle grid: the naive
/// baseline the sweep pipeline replaces. thetas[g] = 2*pi*g / G.
struct GridProfile {
  std::vector<double> thetas;
  std::vector<long long> energies;
};

GridProfile grid_energy(const PointCloud& x, const PointCloud& y, std::size_t p,
                        std::size_t q, double delta, std::size_t grid_points);

/// Exact exhaustive reference: for every pivot pair, evaluates count_matches at
/// every normalized interval endpoint and at the midpoints between consecutive
/// endpoints (any optimum lies on an endpoint or strictly inside a plateau, so
/// no grid discretization error). Counting goes through the direct O(MN) scan,
/// not the sweep. Deliberately naive; clouds are capped at 20 points each.
RegistrationResult brute_force_best(const PointCloud& x, const PointCloud& y, double delta);

inline constexpr std::size_t kBruteForceLimit = 20;

}  // namespace pcreg
