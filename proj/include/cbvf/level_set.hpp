#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cbvf/grid.hpp"

namespace cbvf {

using Point2 = std::array<double, 2>;

struct LevelSetPolyline {
  std::vector<Point2> points;
  bool closed = false;
};

// Marching squares on a 2D field with linear edge interpolation. Saddle cells
// are split by the average of their four corners.
std::vector<LevelSetPolyline> extract_level_set(const ScalarField& field, double level = 0.0);

// 2D slice of a field through fixed coordinates on every other dimension.
// keep holds the two dimensions that remain; fixed gives a coordinate per
// dimension (entries for kept dimensions are ignored).
ScalarField slice_field(const ScalarField& field, std::array<std::size_t, 2> keep,
                        const std::vector<double>& fixed);

}  // namespace cbvf
