#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "adarestart/core/restart.hpp"
#include "adarestart/core/trace.hpp"
#include "adarestart/numerics/prox.hpp"

namespace adarestart::harness {

inline constexpr double kAtBoundTolerance = 1e-9;
inline constexpr std::int64_t kSnapshotInterval = 100;

// 0: strictly inside, -1: at a finite lower bound, +1: at a finite upper bound.
struct ActiveSetSnapshot {
  std::int64_t iteration = 0;
  std::vector<signed char> status;

  friend bool operator==(const ActiveSetSnapshot&, const ActiveSetSnapshot&) = default;
};

inline std::vector<signed char> active_set_of(const Eigen::VectorXd& x, const BoxBounds& bounds,
                                              double tol = kAtBoundTolerance) {
  if (x.size() != bounds.size()) throw std::invalid_argument("active_set_of: dimension mismatch");
  std::vector<signed char> status(static_cast<std::size_t>(x.size()), 0);
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (std::isfinite(bounds.lower[j]) && std::abs(x[j] - bounds.lower[j]) <= tol) {
      status[static_cast<std::size_t>(j)] = -1;
    } else if (std::isfinite(bounds.upper[j]) && std::abs(x[j] - bounds.upper[j]) <= tol) {
      status[static_cast<std::size_t>(j)] = 1;
    }
  }
  return status;
}

// Index of the last snapshot whose active set differs from its predecessor;
// 0 when the set never changes.
inline std::size_t last_active_set_change(const std::vector<ActiveSetSnapshot>& snapshots) {
  if (snapshots.empty()) throw std::invalid_argument("last_active_set_change: no snapshots");
  std::size_t last = 0;
  for (std::size_t k = 1; k < snapshots.size(); ++k) {
    if (snapshots[k].status != snapshots[k - 1].status) last = k;
  }
  return last;
}

// Observer taking a snapshot of the candidate's primal part at every restart
// and every kSnapshotInterval iterations.
class ActiveSetRecorder {
 public:
  explicit ActiveSetRecorder(const BoxBounds* bounds, std::int64_t interval = kSnapshotInterval)
      : bounds_(bounds), interval_(interval) {}

  void start(const Eigen::VectorXd& x0) {
    if (bounds_) snapshots_.push_back({0, active_set_of(x0, *bounds_)});
  }

  template <class Alg>
  void operator()(const TraceRow& row, const Alg& alg, const RestartController&) {
    if (!bounds_) return;
    if (row.restarted || row.total_iter % interval_ == 0) {
      snapshots_.push_back({row.total_iter, active_set_of(alg.candidate().x, *bounds_)});
    }
  }

  const std::vector<ActiveSetSnapshot>& snapshots() const { return snapshots_; }

 private:
  const BoxBounds* bounds_;
  std::int64_t interval_;
  std::vector<ActiveSetSnapshot> snapshots_;
};

}  // namespace adarestart::harness
