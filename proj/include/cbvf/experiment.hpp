#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cbvf/config.hpp"
#include "cbvf/controllers.hpp"
#include "cbvf/simulation.hpp"

namespace cbvf {

// Environment variable that, when set, replaces the config's output_dir.
inline constexpr const char* kOutputDirEnv = "CBVF_OUTPUT_DIR";

struct RunRecord {
  double gamma = 0.0;
  PolicyKind controller = PolicyKind::kCbvfQp;
  DisturbanceKind disturbance = DisturbanceKind::kZero;
  std::size_t start = 0;
  State x0;
  Metrics metrics;
  std::string trajectory_file;
};

// Owns the solves of one experiment. Value functions are solved on first use
// or loaded from the output directory when a matching file is already there.
class ExperimentRunner {
 public:
  explicit ExperimentRunner(Experiment exp, std::optional<std::string> output_dir = std::nullopt);

  const Experiment& experiment() const noexcept { return exp_; }
  const ControlAffineModel& model() const noexcept { return model_; }
  const Grid& grid() const noexcept { return grid_; }
  const ScalarField& target_field() const noexcept { return *l_field_; }
  const std::string& output_dir() const noexcept { return output_dir_; }

  ValueFunctionPtr value_function(double gamma);
  std::shared_ptr<const ScalarField> v_infinity();
  double t0() const;
  double dt_sim() const;

  std::vector<State> starts();
  Policy reference_policy() const;
  Policy make_policy(PolicyKind kind, double gamma, TallyPtr tally);
  RunRecord run(double gamma, PolicyKind kind, DisturbanceKind dist, std::size_t start_index,
                const State& x0, bool write_files);

  // Solve every gamma (and V-infinity when a CBF-QP is configured) and write
  // the containers plus zero-level-set CSVs.
  void solve_all();
  // Every gamma x controller x disturbance x start; trajectory CSVs, then metrics.csv.
  std::vector<RunRecord> simulate_all();
  // One SVG per gamma with l, B(t0) and the trajectories of that gamma.
  void plot_all(const std::vector<RunRecord>& runs);

  std::string path(const std::string& file) const;

 private:
  ValueFunction solve_or_load(const std::string& file, double gamma, bool stationary);
  ScalarField plane(const ScalarField& field, const State& through) const;

  Experiment exp_;
  std::string output_dir_;
  ControlAffineModel model_;
  Grid grid_;
  std::shared_ptr<const ScalarField> l_field_;
  std::map<double, ValueFunctionPtr> solved_;
  std::shared_ptr<const ScalarField> v_inf_;
  std::optional<std::vector<State>> starts_;
};

std::string format_metrics_table(const std::vector<RunRecord>& runs);
std::string gamma_tag(double gamma);

}  // namespace cbvf
