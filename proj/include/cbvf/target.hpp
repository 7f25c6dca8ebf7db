#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbvf/grid.hpp"

namespace cbvf {

// Safety target l(x): box interior, outside of a disk, or the minimum of several.
struct TargetShape {
  enum class Kind { kBox, kCircleComplement, kMinOf };

  Kind kind = Kind::kBox;
  std::vector<double> lo;        // box
  std::vector<double> hi;        // box
  std::vector<double> center;    // circle_complement
  double radius = 0.0;           // circle_complement
  std::vector<std::size_t> dims;
  std::vector<TargetShape> children;  // min_of

  bool operator==(const TargetShape&) const = default;
};

TargetShape box_shape(std::vector<double> lo, std::vector<double> hi,
                      std::vector<std::size_t> dims = {});
TargetShape circle_complement_shape(std::vector<double> center, double radius,
                                    std::vector<std::size_t> dims = {});
TargetShape min_of_shape(std::vector<TargetShape> children);

double evaluate_target(const TargetShape& shape, std::span<const double> x);
ScalarField build_target_field(const TargetShape& shape, const Grid& grid);

// Text form, e.g. "min_of(box([-1, -2], [8, 2], [0, 1]), circle_complement([0, 0], 1))".
// Throws ContractError on malformed input.
TargetShape parse_target(std::string_view text);
std::string format_target(const TargetShape& shape);

}  // namespace cbvf
