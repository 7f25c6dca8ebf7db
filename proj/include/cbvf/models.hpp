#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cbvf {

using State = std::vector<double>;
using Control = std::vector<double>;
using Disturbance = std::vector<double>;

// Axis-aligned box of admissible inputs.
struct Box {
  std::vector<double> min;
  std::vector<double> max;

  std::size_t channels() const noexcept { return min.size(); }
  bool contains(std::span<const double> v) const;
  std::vector<double> midpoint() const;
  std::vector<double> clamp(std::span<const double> v) const;
  bool operator==(const Box&) const = default;
};

Box make_box(std::vector<double> min, std::vector<double> max);

// Dynamics x' = p(x) + q(x) u + r(x) d. The matrix callbacks write row-major
// n_x-by-n_u (resp. n_x-by-n_d) blocks.
class ControlAffineModel {
 public:
  using VectorFn = std::function<void(std::span<const double> x, std::span<double> out)>;

  ControlAffineModel(std::string name, std::size_t n_x, std::size_t n_u, std::size_t n_d,
                     VectorFn drift, VectorFn control_matrix, VectorFn disturbance_matrix,
                     Box u_box, Box d_box);

  const std::string& name() const noexcept { return name_; }
  std::size_t n_x() const noexcept { return n_x_; }
  std::size_t n_u() const noexcept { return n_u_; }
  std::size_t n_d() const noexcept { return n_d_; }
  const Box& u_box() const noexcept { return u_box_; }
  const Box& d_box() const noexcept { return d_box_; }

  void drift(std::span<const double> x, std::span<double> out) const { drift_(x, out); }
  void control_matrix(std::span<const double> x, std::span<double> out) const {
    control_matrix_(x, out);
  }
  void disturbance_matrix(std::span<const double> x, std::span<double> out) const {
    if (n_d_ > 0) disturbance_matrix_(x, out);
  }

  std::vector<double> drift(std::span<const double> x) const;
  std::vector<double> control_matrix(std::span<const double> x) const;
  std::vector<double> disturbance_matrix(std::span<const double> x) const;

  // f(x, u, d) without the box check; used inside integrators.
  void velocity(std::span<const double> x, std::span<const double> u,
                std::span<const double> d, std::span<double> out) const;

 private:
  std::string name_;
  std::size_t n_x_;
  std::size_t n_u_;
  std::size_t n_d_;
  VectorFn drift_;
  VectorFn control_matrix_;
  VectorFn disturbance_matrix_;
  Box u_box_;
  Box d_box_;
};

// Checks u and d against their boxes, then returns f(x, u, d).
State eval_dynamics(const ControlAffineModel& model, std::span<const double> x,
                    std::span<const double> u, std::span<const double> d);

ControlAffineModel make_double_integrator();
ControlAffineModel make_dubins_car(double speed = 1.0);
ControlAffineModel make_single_integrator_1d(double u_max, double d_max);

struct InputPair {
  Control u;
  Disturbance d;
};

// Maximin inputs for a costate: u maximises and d minimises costate' f.
// Zero coefficients select the box midpoint.
InputPair bang_bang_inputs(const ControlAffineModel& model, std::span<const double> x,
                           std::span<const double> costate);

}  // namespace cbvf
