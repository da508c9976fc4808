#pragma once

#include <cstdint>
#include <utility>

#include "gluq/errors.hpp"

namespace gluq {

/// Uniform discretization of the unit square. The n*n nodes include the
/// endpoints 0 and 1 in each direction and are stored row-major with the
/// fast index running along x: flat = iy * n + ix.
struct Grid2D {
  int n = 65;

  explicit Grid2D(int n_per_side = 65) : n(n_per_side) {
    if (n < 2) throw ConfigError("Grid2D: n must be >= 2, got " + std::to_string(n));
  }

  std::int64_t num_points() const { return std::int64_t(n) * n; }

  double coord(int index) const {
    return static_cast<double>(index) / static_cast<double>(n - 1);
  }

  /// Node position (x, y) of the flat index.
  std::pair<double, double> point(std::int64_t flat) const {
    const int iy = static_cast<int>(flat / n);
    const int ix = static_cast<int>(flat % n);
    return {coord(ix), coord(iy)};
  }

  /// Nearest node (iy, ix) to a physical location in [0,1]^2.
  std::pair<int, int> nearest_node(double x, double y) const {
    auto clamp_idx = [this](double t) {
      int i = static_cast<int>(t * (n - 1) + 0.5);
      if (i < 0) i = 0;
      if (i > n - 1) i = n - 1;
      return i;
    };
    return {clamp_idx(y), clamp_idx(x)};
  }
};

}  // namespace gluq
