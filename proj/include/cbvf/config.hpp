#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbvf/controllers.hpp"
#include "cbvf/grid.hpp"
#include "cbvf/models.hpp"
#include "cbvf/simulation.hpp"
#include "cbvf/solver.hpp"
#include "cbvf/target.hpp"

namespace cbvf {

struct ModelSpec {
  std::string name;  // double_integrator | dubins_car | single_integrator_1d
  double speed = 1.0;
  double u_max = 1.0;
  double d_max = 0.0;

  bool operator==(const ModelSpec&) const = default;
};

ControlAffineModel make_model(const ModelSpec& spec);

enum class ReferenceKind { kPd, kHeading, kZero };

struct ControllerSpec {
  std::vector<PolicyKind> kinds;
  ReferenceKind reference = ReferenceKind::kZero;
  double kp = 1.0;
  double kd = 1.5;
  double k_heading = 2.0;
  std::vector<double> goal;  // leading state coordinates of the goal point
  double goal_radius = 0.3;
  std::optional<double> epsilon;  // unset: default_epsilon

  bool operator==(const ControllerSpec&) const = default;
};

struct SimulationSpec {
  std::vector<State> x0;
  std::size_t x0_random = 0;  // extra starts drawn inside the safe set
  std::optional<double> t0;   // unset: horizon
  std::optional<double> dt_sim;  // unset: default_sim_step
  std::vector<DisturbanceKind> disturbances;
  Disturbance disturbance_vector;
  std::uint64_t seed = 0;

  bool operator==(const SimulationSpec&) const = default;
};

struct Experiment {
  ModelSpec model;
  GridSpec grid;
  TargetShape target;
  std::vector<double> gammas;
  SolveConfig solve;  // gamma is taken from gammas
  ControllerSpec controller;
  SimulationSpec simulation;
  std::string output_dir = "out";
  std::string label;

  bool operator==(const Experiment&) const = default;
};

// Line-oriented "key = value" with '#' comments. Unknown keys, duplicates and
// malformed values raise ConfigError carrying the line number.
Experiment parse_experiment_config(std::string_view text);
Experiment load_experiment_config(const std::string& path);

// Writes every key explicitly, so parsing the result reproduces the experiment.
std::string serialize_experiment(const Experiment& exp);

std::string_view reference_kind_name(ReferenceKind kind);
std::string_view time_scheme_name(TimeScheme scheme);
std::string_view value_scaling_name(ValueScaling scaling);

}  // namespace cbvf
