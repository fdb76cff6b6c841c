#pragma once

#include <vector>

#include "shearlift/types.hpp"

namespace shearlift {

/// Polar sampling grid on the disk: n_circles concentric rings at radii
/// r_max * (i+1)/n_circles (outermost ring exactly at r_max) crossed with
/// n_rays equally spaced angles 2 pi j / n_rays, plus (optionally) the
/// center point.
struct DiskGrid {
  int n_circles;
  int n_rays;
  double r_max;
  bool include_center;

  DiskGrid(int circles, int rays, double rmax, bool center = true)
      : n_circles(circles), n_rays(rays), r_max(rmax), include_center(center) {
    if (n_circles < 1) throw std::invalid_argument("DiskGrid: n_circles must be >= 1");
    if (n_rays < 3) throw std::invalid_argument("DiskGrid: n_rays must be >= 3");
    if (!(r_max > 0.0) || !(r_max < 1.0)) {
      throw std::invalid_argument("DiskGrid: r_max must lie in (0, 1)");
    }
  }
};

/// Grid nodes in ring-major order (ring 0 = innermost ring, all rays in
/// angle order), with the center appended LAST when present.
std::vector<DiskPoint> make_grid(const DiskGrid& grid);

}  // namespace shearlift
