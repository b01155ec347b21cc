#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace adarestart {

struct TraceRow {
  std::int64_t total_iter = 0;
  std::int64_t epoch = 1;
  std::int64_t inner_iter = 0;
  double residual = 0.0;
  std::optional<double> potential;
  bool restarted = false;
  // Residual of the algorithm's current (non-averaged) iterate, when tracked.
  std::optional<double> current_residual;
  std::optional<double> wall_seconds;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct SolverTrace {
  std::vector<TraceRow> rows;

  bool empty() const { return rows.empty(); }
  std::size_t size() const { return rows.size(); }

  // Lengths tau_1, tau_2, ... of the completed epochs.
  std::vector<std::int64_t> epoch_lengths() const {
    std::vector<std::int64_t> lengths;
    for (const auto& row : rows) {
      if (row.restarted) lengths.push_back(row.inner_iter);
    }
    return lengths;
  }

  std::int64_t restart_count() const {
    std::int64_t count = 0;
    for (const auto& row : rows) count += row.restarted ? 1 : 0;
    return count;
  }

  // First total iteration whose residual is at or below target.
  std::optional<std::int64_t> first_below(double target, bool use_current = false) const {
    for (const auto& row : rows) {
      const double r = use_current && row.current_residual ? *row.current_residual : row.residual;
      if (r <= target) return row.total_iter;
    }
    return std::nullopt;
  }

  friend bool operator==(const SolverTrace&, const SolverTrace&) = default;
};

}  // namespace adarestart
