#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

#include "cbvf/models.hpp"

namespace cbvf {

// min |u - u_ref|^2  s.t.  offset + lin . u >= 0,  u in box.
struct QpInstance {
  Control u_ref;
  std::vector<double> lin;
  double offset = 0.0;
  Box box;
};

inline constexpr std::size_t kMaxQpChannels = 4;

// Exact minimiser by active-set enumeration. Throws InfeasibleQpError when no
// box point meets the constraint.
Control solve_min_norm_qp(const QpInstance& qp);

// Largest constraint value reachable in the box (attained at a vertex).
double best_vertex_slack(const QpInstance& qp);

struct KktReport {
  double lambda = 0.0;           // halfspace multiplier
  double stationarity = 0.0;     // worst violation of the sign/zero conditions on 2(u - u_ref) - lambda lin
  double complementarity = 0.0;  // |lambda * slack|
  double primal = 0.0;           // max(0, -slack) plus box excess

  bool ok(double tol) const {
    return lambda >= 0.0 && stationarity <= tol && complementarity <= tol && primal <= tol;
  }
};

KktReport check_kkt(const QpInstance& qp, const Control& u);

// Relaxation events, shared by every policy that reports into it.
class RelaxationTally {
 public:
  void record() noexcept { count_.fetch_add(1, std::memory_order_relaxed); }
  std::size_t count() const noexcept { return count_.load(std::memory_order_relaxed); }
  void reset() noexcept { count_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::size_t> count_{0};
};

struct RelaxedSolution {
  Control u;
  bool relaxed = false;
  double slack_added = 0.0;
};

// Solves the QP; if it is infeasible, raises offset by the minimal amount that
// makes the best vertex feasible and solves again.
RelaxedSolution solve_min_norm_qp_relaxed(QpInstance qp);

}  // namespace cbvf
