#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbvf/controllers.hpp"
#include "cbvf/grid.hpp"
#include "cbvf/models.hpp"
#include "cbvf/solver.hpp"

namespace cbvf {

enum class DisturbanceKind { kZero, kConstant, kWorstCase };

std::string_view disturbance_kind_name(DisturbanceKind kind);
DisturbanceKind parse_disturbance_kind(std::string_view name);

class DisturbanceStrategy {
 public:
  static DisturbanceStrategy zero();
  static DisturbanceStrategy constant(const ControlAffineModel& model, Disturbance d);

  DisturbanceKind kind() const noexcept { return kind_; }
  Disturbance evaluate(const ControlAffineModel& model, std::span<const double> x,
                       double t) const;

 private:
  friend DisturbanceStrategy worst_case_disturbance(ValueFunctionPtr vf,
                                                    const ControlAffineModel& model);
  DisturbanceKind kind_ = DisturbanceKind::kZero;
  Disturbance constant_;
  ValueFunctionPtr vf_;
};

// d_j at the box end that minimises (g' r)_j, g the interpolated gradient of B.
DisturbanceStrategy worst_case_disturbance(ValueFunctionPtr vf, const ControlAffineModel& model);

struct Sample {
  double t = 0.0;
  State x;
  Control u;
  Disturbance d;
  double B = 0.0;
  double l = 0.0;
  std::string mode;
};

struct Trajectory {
  std::vector<Sample> samples;
  double dt_sim = 0.0;
  bool exited_domain = false;
  std::size_t relaxation_count = 0;
  // Period per state dimension, 0 where not periodic.
  std::vector<double> periods;
};

// B is read from vf (linear in time between slices), l from l_field.
Trajectory simulate(const ControlAffineModel& model, const Policy& policy,
                    const DisturbanceStrategy& dist, const ValueFunction& vf,
                    const ScalarField& l_field, std::span<const double> x0, double t0,
                    double dt_sim);

// min(0.01, stable solver step).
double default_sim_step(const ControlAffineModel& model, const Grid& grid, double cfl);

struct Metrics {
  double min_l = 0.0;
  double min_B = 0.0;
  bool target_reached = false;
  State final_state;
  double control_effort = 0.0;
  std::size_t relaxation_count = 0;
  bool exited_domain = false;
};

// target_center may cover only the leading state dimensions (e.g. a planar goal).
Metrics trajectory_metrics(const Trajectory& traj, std::span<const double> target_center,
                           double target_radius);

// Two identical slices spanning [horizon, 0]: lets a stationary field
// (V-infinity) stand in wherever a time-indexed value function is expected.
ValueFunction stationary_value_function(const ScalarField& field, double horizon, double gamma,
                                        std::string model_name);

}  // namespace cbvf
