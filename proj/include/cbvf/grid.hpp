#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace cbvf {

inline constexpr std::size_t kMaxGridDims = 4;

struct GridSpec {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<std::size_t> n;
  std::vector<bool> periodic;

  bool operator==(const GridSpec&) const = default;
};

// Uniform Cartesian grid. Non-periodic dimensions include both endpoints;
// periodic dimensions place n nodes on [lo, hi) and wrap at hi.
class Grid {
 public:
  explicit Grid(GridSpec spec);

  const GridSpec& spec() const noexcept { return spec_; }
  std::size_t ndim() const noexcept { return spec_.n.size(); }
  std::size_t size() const noexcept { return size_; }

  std::size_t n(std::size_t dim) const { return spec_.n[dim]; }
  double lo(std::size_t dim) const { return spec_.lo[dim]; }
  double hi(std::size_t dim) const { return spec_.hi[dim]; }
  bool periodic(std::size_t dim) const { return spec_.periodic[dim]; }
  double dx(std::size_t dim) const { return dx_[dim]; }
  const std::vector<double>& dx() const noexcept { return dx_; }
  double period(std::size_t dim) const { return spec_.hi[dim] - spec_.lo[dim]; }

  // Row-major, last dimension fastest.
  std::size_t stride(std::size_t dim) const { return strides_[dim]; }

  double coordinate(std::size_t dim, std::size_t k) const {
    return spec_.lo[dim] + static_cast<double>(k) * dx_[dim];
  }
  std::size_t flat_index(std::span<const std::size_t> multi) const;
  void multi_index(std::size_t flat, std::span<std::size_t> out) const;
  std::vector<double> node(std::size_t flat) const;

  // Wraps periodic coordinates into [lo, hi); other coordinates untouched.
  std::vector<double> wrap(std::span<const double> x) const;
  bool contains(std::span<const double> x) const;

  bool operator==(const Grid& other) const { return spec_ == other.spec_; }

 private:
  GridSpec spec_;
  std::vector<double> dx_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

Grid build_grid(const GridSpec& spec);

class ScalarField {
 public:
  ScalarField(Grid grid, std::vector<double> values);
  // Samples fn at every node.
  template <typename Fn>
  static ScalarField sample(const Grid& grid, Fn&& fn) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = fn(grid.node(i));
    return ScalarField(grid, std::move(values));
  }

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

  bool operator==(const ScalarField& other) const = default;

 private:
  Grid grid_;
  std::vector<double> values_;
};

// Enclosing cell of a point: per dimension the lower/upper node index and the
// weight of the upper node.
struct CellLocation {
  std::size_t ndim = 0;
  std::array<std::size_t, kMaxGridDims> lower{};
  std::array<std::size_t, kMaxGridDims> upper{};
  std::array<double, kMaxGridDims> frac{};
};

CellLocation locate(const Grid& grid, std::span<const double> x);
double interpolate(const Grid& grid, std::span<const double> values, const CellLocation& cell);
void interpolate_gradient(const Grid& grid, std::span<const double> values,
                          const CellLocation& cell, std::span<double> out);

// Central difference at a node (one-sided at non-periodic edges).
double node_central_difference(const Grid& grid, std::span<const double> values,
                               std::size_t flat, std::size_t dim, std::size_t k);

// One-sided differences at a node along dim. Non-periodic edges use a linearly
// extrapolated ghost node, so the edge difference equals the adjacent interior one.
inline void one_sided_differences(const Grid& grid, std::span<const double> values,
                                  std::size_t flat, std::size_t dim, std::size_t k,
                                  double& dminus, double& dplus) {
  const std::size_t n = grid.n(dim);
  const std::size_t s = grid.stride(dim);
  const double inv = 1.0 / grid.dx(dim);
  const double v = values[flat];
  double left;
  double right;
  if (k > 0) {
    left = values[flat - s];
  } else if (grid.periodic(dim)) {
    left = values[flat + (n - 1) * s];
  } else {
    left = 2.0 * v - values[flat + s];
  }
  if (k + 1 < n) {
    right = values[flat + s];
  } else if (grid.periodic(dim)) {
    right = values[flat - (n - 1) * s];
  } else {
    right = 2.0 * v - values[flat - s];
  }
  dminus = (v - left) * inv;
  dplus = (right - v) * inv;
}

std::pair<ScalarField, ScalarField> upwind_derivatives(const ScalarField& field, std::size_t dim);

double interpolate_value(const ScalarField& field, std::span<const double> x);
std::vector<double> gradient_at(const ScalarField& field, std::span<const double> x);

}  // namespace cbvf
