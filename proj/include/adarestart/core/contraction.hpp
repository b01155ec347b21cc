#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "adarestart/core/check.hpp"
#include "adarestart/core/restart.hpp"
#include "adarestart/core/trace.hpp"

namespace adarestart {

// Checks ||w^t - w*|| <= factor * ||omega - w*|| for each distance recorded
// in one epoch. PDHG: factor = (1 - gamma_x gamma_y L^2)^(-1/2); extragradient: 1.
inline CheckReport distance_contraction_report(const std::vector<double>& distances,
                                               double start_distance, double factor,
                                               double rel_slack = 1e-10) {
  CheckReport report;
  report.name = "distance-contraction";
  const double bound = factor * start_distance;
  for (double d : distances) report.record(bound, d, rel_slack * std::max(1.0, bound));
  return report;
}

// Observer for run_restarted that tracks distance-to-solution ratios of the
// candidate (and optionally the current iterate) against the start of each
// epoch, for any run where a solution-set distance is computable.
class ContractionMonitor {
 public:
  using DistanceFn = std::function<double(const PrimalDualPoint&)>;
  using FactorFn = std::function<double(std::int64_t)>;

  ContractionMonitor(DistanceFn distance, double factor, bool current_nonincreasing = false)
      : ContractionMonitor(std::move(distance), FactorFn([factor](std::int64_t) { return factor; }),
                           current_nonincreasing) {}

  // factor(t) may depend on the inner iteration, e.g. Q(t) = 2 sqrt(kappa) / (t + 1).
  ContractionMonitor(DistanceFn distance, FactorFn factor, bool current_nonincreasing = false)
      : distance_(std::move(distance)), factor_(std::move(factor)), check_current_(current_nonincreasing) {
    candidate_report_.name = "candidate-contraction";
    current_report_.name = "current-nonincreasing";
  }

  template <class Alg>
  void operator()(const TraceRow& row, const Alg& alg, const RestartController& controller) {
    if (row.inner_iter == 1) {
      const PrimalDualPoint& start = row.restarted && controller.omega_prev2()
                                         ? *controller.omega_prev2()
                                         : controller.omega_prev();
      start_distance_ = distance_(start);
      previous_current_ = start_distance_;
    }
    const double bound = factor_(row.inner_iter) * start_distance_;
    const double observed = distance_(alg.candidate());
    candidate_report_.record(bound, observed, 1e-10 * std::max(1.0, bound));
    max_ratio_ = std::max(max_ratio_, start_distance_ > 0 ? observed / start_distance_ : 0.0);
    if (check_current_) {
      const double d = distance_(alg.current());
      current_report_.record(previous_current_, d, 1e-10 * std::max(1.0, previous_current_));
      previous_current_ = d;
    }
  }

  const CheckReport& candidate_report() const { return candidate_report_; }
  const CheckReport& current_report() const { return current_report_; }
  double max_ratio() const { return max_ratio_; }

 private:
  DistanceFn distance_;
  FactorFn factor_;
  bool check_current_;
  double start_distance_ = 0.0;
  double previous_current_ = 0.0;
  double max_ratio_ = 0.0;
  CheckReport candidate_report_;
  CheckReport current_report_;
};

}  // namespace adarestart
