#pragma once

#include <cstddef>

#include "frechet3/copula2.hpp"

namespace frechet3 {

/// Inclusive equispaced grid {0, 1/(m-1), ..., 1} on each axis.
struct GridSpec {
  int m;
  explicit GridSpec(int points_per_axis) : m(points_per_axis) {
    if (m < 3) throw InvalidSpecError("grid: need at least 3 points per axis");
  }
  double point(int i) const { return static_cast<double>(i) / (m - 1); }
  std::size_t size2() const { return static_cast<std::size_t>(m) * m; }
  std::size_t size3() const { return static_cast<std::size_t>(m) * m * m; }
};

}  // namespace frechet3
