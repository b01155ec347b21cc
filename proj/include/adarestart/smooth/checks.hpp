#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "adarestart/core/check.hpp"
#include "adarestart/core/restart.hpp"
#include "adarestart/core/trace.hpp"

namespace adarestart {

// Sublinear FISTA bound within one epoch started at omega:
//   f(w^t) - f(x) <= 2 eta L ||omega - x||^2 / (t + 1)^2,  t = 1, 2, ...
// f_values[t-1] = f(w^t).
inline CheckReport agd_sublinear_report(const std::vector<double>& f_values, double f_reference,
                                        double start_dist_sq, double eta, double smoothness) {
  CheckReport report;
  report.name = "agd-sublinear";
  for (std::size_t i = 0; i < f_values.size(); ++i) {
    const double t = static_cast<double>(i + 1);
    const double bound = 2.0 * eta * smoothness * start_dist_sq / ((t + 1.0) * (t + 1.0));
    const double gap = f_values[i] - f_reference;
    report.record(bound, gap, 1e-12 * std::max(1.0, std::abs(f_reference)));
  }
  return report;
}

// Observer applying the sublinear bound at every inner iteration of a run,
// with the reference point fixed across epochs.
class SublinearMonitor {
 public:
  SublinearMonitor(Eigen::VectorXd reference, double f_reference, double eta, double smoothness)
      : reference_(std::move(reference)), f_reference_(f_reference), eta_(eta), smoothness_(smoothness) {
    report_.name = "agd-sublinear";
  }

  template <class Alg>
  void operator()(const TraceRow& row, const Alg& alg, const RestartController& controller) {
    if (row.inner_iter == 1) {
      const PrimalDualPoint& start = row.restarted && controller.omega_prev2()
                                         ? *controller.omega_prev2()
                                         : controller.omega_prev();
      start_dist_sq_ = (start.x - reference_).squaredNorm();
    }
    const double t = static_cast<double>(row.inner_iter);
    const double bound = 2.0 * eta_ * smoothness_ * start_dist_sq_ / ((t + 1.0) * (t + 1.0));
    report_.record(bound, alg.objective() - f_reference_, 1e-12 * std::max(1.0, std::abs(f_reference_)));
  }

  const CheckReport& report() const { return report_; }

 private:
  Eigen::VectorXd reference_;
  double f_reference_;
  double eta_;
  double smoothness_;
  double start_dist_sq_ = 0.0;
  CheckReport report_;
};

}  // namespace adarestart
