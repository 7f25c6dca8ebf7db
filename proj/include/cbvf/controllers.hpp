#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbvf/grid.hpp"
#include "cbvf/models.hpp"
#include "cbvf/qp.hpp"
#include "cbvf/solver.hpp"

namespace cbvf {

enum class PolicyKind { kOptimal, kLeastRestrictive, kCbvfQp, kCbfQp, kReference };

std::string_view policy_kind_name(PolicyKind kind);
PolicyKind parse_policy_kind(std::string_view name);  // throws ContractError

// What a policy did at one (x, t): the control plus a tag recorded in
// trajectories. Least-restrictive tags say which branch fired.
struct Decision {
  Control u;
  std::string mode;
  bool relaxed = false;
};

class Policy {
 public:
  using Fn = std::function<Decision(std::span<const double> x, double t)>;

  Policy(PolicyKind kind, Fn fn) : kind_(kind), fn_(std::move(fn)) {}

  PolicyKind kind() const noexcept { return kind_; }
  Decision decide(std::span<const double> x, double t) const { return fn_(x, t); }
  Control operator()(std::span<const double> x, double t) const { return fn_(x, t).u; }

 private:
  PolicyKind kind_;
  Fn fn_;
};

// Reference controllers.
Policy zero_reference(const ControlAffineModel& model);
// u = clamp(-kp (z - z_goal) - kd v) for the double integrator.
Policy pd_reference(const ControlAffineModel& model, double kp, double kd, double z_goal);
// Turn toward a planar goal: u = clamp(k * wrap(bearing - theta)).
Policy heading_reference(const ControlAffineModel& model, double k, double goal_x, double goal_y);

struct QpTerms {
  double offset = 0.0;
  std::vector<double> lin;
};

QpTerms qp_constraint_terms(const ValueFunction& vf, const ControlAffineModel& model,
                            double gamma, std::span<const double> x, double t);

using ValueFunctionPtr = std::shared_ptr<const ValueFunction>;
using TallyPtr = std::shared_ptr<RelaxationTally>;

Policy optimal_safe_policy(ValueFunctionPtr vf, const ControlAffineModel& model);

Policy least_restrictive_policy(ValueFunctionPtr vf, const ControlAffineModel& model,
                                Policy reference, double epsilon);

// 2 * max_i dx_i * (steepest axis slope of B over the first and last slices).
double default_epsilon(const ValueFunction& vf);

Policy cbvf_qp_policy(ValueFunctionPtr vf, const ControlAffineModel& model, double gamma,
                      Policy reference, TallyPtr tally = nullptr);

Policy cbf_qp_policy(std::shared_ptr<const ScalarField> v_inf, const ControlAffineModel& model,
                     double gamma, Policy reference, TallyPtr tally = nullptr);

}  // namespace cbvf
