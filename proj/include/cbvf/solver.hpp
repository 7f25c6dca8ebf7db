#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cbvf/grid.hpp"
#include "cbvf/models.hpp"

namespace cbvf {

enum class TimeScheme { kEuler, kTvdRk3 };

// Variable the scheme integrates. kLinear steps B itself. kLogNegative steps
// W = B for B >= 0 and W = -log(1 - B) for B < 0, a C1 monotone change of
// variables: the zero set and the positive values are the same function, but
// the exp(gamma |t|) growth of negative values becomes linear in W. Without it
// the steep negative side leaks through the dissipation term and erodes the
// safe set once gamma |T| is large. Has no effect at gamma = 0.
enum class ValueScaling { kLinear, kLogNegative };

struct SolveConfig {
  double gamma = 0.0;       // discount rate, >= 0
  double horizon = -1.0;    // initial time T < 0; the final time is 0
  double cfl = 0.5;         // in (0, 1]
  TimeScheme time_scheme = TimeScheme::kTvdRk3;
  ValueScaling scaling = ValueScaling::kLogNegative;
  std::size_t store_stride = 0;  // 0 picks a stride that keeps <= 512 slices
  double stationary_tol = 1e-3;  // sup-norm change per unit time
  std::size_t max_steps = 1000000;

  void validate() const;
  bool operator==(const SolveConfig&) const = default;
};

// Time-indexed value slices, times[0] = 0 decreasing to the horizon.
struct ValueFunction {
  Grid grid;
  std::vector<double> times;
  std::vector<ScalarField> slices;
  double gamma = 0.0;
  std::string model_name;

  double horizon() const { return times.back(); }
  const ScalarField& terminal() const { return slices.front(); }

  // Index i and weight w such that t lies in [times[i+1], times[i]] with
  // value = (1 - w) * slice[i] + w * slice[i+1].
  struct Bracket {
    std::size_t index;
    double weight;
  };
  Bracket bracket(double t) const;

  double value(std::span<const double> x, double t) const;
  std::vector<double> gradient(std::span<const double> x, double t) const;
  // Difference quotient between the two slices bracketing t.
  double time_derivative(std::span<const double> x, double t) const;

  void validate() const;
};

double hamiltonian(const ControlAffineModel& model, std::span<const double> x,
                   std::span<const double> costate);

std::vector<double> dissipation_bounds(const ControlAffineModel& model, const Grid& grid);

// Local Lax-Friedrichs flux for the backward-time update
// dB/dtau = H(x, DB) + gamma B.
double numerical_hamiltonian(const ControlAffineModel& model, std::span<const double> x,
                             std::span<const double> dminus, std::span<const double> dplus,
                             std::span<const double> alpha);

// Largest stable step: cfl / sum_i(alpha_i / dx_i); infinity for static dynamics.
double stable_time_step(const Grid& grid, std::span<const double> alpha, double cfl);

ScalarField step_backward(const ScalarField& slice, const ScalarField& l_field, double dt,
                          const SolveConfig& cfg, const ControlAffineModel& model);

ValueFunction solve_cbvf(const ControlAffineModel& model, const ScalarField& l_field,
                         const SolveConfig& cfg);

struct StationaryResult {
  ScalarField value;
  std::size_t steps;
  double residual;
};

StationaryResult solve_stationary_detailed(const ControlAffineModel& model,
                                           const ScalarField& l_field, const SolveConfig& cfg);
ScalarField solve_stationary(const ControlAffineModel& model, const ScalarField& l_field,
                             const SolveConfig& cfg);

}  // namespace cbvf
