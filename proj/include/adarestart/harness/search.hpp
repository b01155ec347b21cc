#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adarestart/harness/experiment.hpp"

namespace adarestart::harness {

struct PeriodSummary {
  std::int64_t period = 0;
  std::optional<std::int64_t> iterations_to_target;
  double final_residual = std::numeric_limits<double>::infinity();
  std::optional<std::string> error;
};

struct GridSearchResult {
  std::int64_t best_period = 0;
  // True when no period reached the target and the smallest final residual decided.
  bool fallback = false;
  std::vector<PeriodSummary> runs;
};

// Runs Fixed(T) for each T and picks the earliest to reach the target (ties to
// the smaller T). Per-run failures are recorded and excluded.
inline GridSearchResult grid_search(ExperimentConfig cfg, std::vector<std::int64_t> periods) {
  if (periods.empty()) throw std::invalid_argument("grid_search: empty period set");
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
  cfg.policy = PolicyKind::Fixed;
  cfg.trace_path.reset();
  cfg.summary_path.reset();

  GridSearchResult out;
  for (const std::int64_t period : periods) {
    PeriodSummary s;
    s.period = period;
    cfg.period = period;
    try {
      const ExperimentOutcome run = run_experiment(cfg);
      s.iterations_to_target = run.result.iterations_to_target;
      if (!run.result.trace.empty()) s.final_residual = run.result.trace.rows.back().residual;
    } catch (const std::exception& e) {
      s.error = e.what();
    }
    out.runs.push_back(s);
  }

  const PeriodSummary* best = nullptr;
  for (const auto& s : out.runs) {
    if (s.error || !s.iterations_to_target) continue;
    if (!best || *s.iterations_to_target < *best->iterations_to_target) best = &s;
  }
  if (!best) {
    out.fallback = true;
    for (const auto& s : out.runs) {
      if (s.error) continue;
      if (!best || s.final_residual < best->final_residual) best = &s;
    }
  }
  if (!best) throw std::runtime_error("grid_search: every run failed");
  out.best_period = best->period;
  return out;
}

struct RatioSweepEntry {
  double ratio = 0.0;
  double final_residual = std::numeric_limits<double>::infinity();
};

struct RatioSweepResult {
  double best_ratio = 1.0;
  PdhgStepSizes steps;
  std::vector<RatioSweepEntry> entries;
};

inline std::vector<double> default_ratio_grid() {
  std::vector<double> r;
  for (int e = -5; e <= 5; ++e) r.push_back(std::pow(10.0, e));
  return r;
}

// PDHG without restarts for a fixed number of iterations per ratio; the ratio
// with the smallest final combined residual (better of the averaged and the
// current iterate) wins, first listed on ties.
inline RatioSweepResult lp_ratio_sweep(const problems::BoxLpInstance& lp, const std::vector<double>& ratios,
                                       std::int64_t iterations = 1000) {
  if (ratios.empty()) throw std::invalid_argument("lp_ratio_sweep: empty ratio set");
  const auto prob = problems::to_saddle(lp);
  const double L = op_norm(prob.op()).value;
  const PrimalDualPoint omega0(project_box(Eigen::VectorXd::Zero(lp.primal_dim()), lp.bounds),
                               Eigen::VectorXd::Zero(lp.dual_dim()));
  auto residual = [&](const PrimalDualPoint& w) { return problems::lp_residual(lp, w).combined; };
  RatioSweepResult out;
  double best = std::numeric_limits<double>::infinity();
  for (const double r : ratios) {
    if (!(r > 0.0)) throw std::invalid_argument("lp_ratio_sweep: ratios must be positive");
    Pdhg<LinearSaddleProblem> alg(prob, PdhgStepSizes::from_ratio(r, L), L);
    RatioSweepEntry e;
    e.ratio = r;
    try {
      const RunResult run = run_restarted(alg, omega0, NoRestart{}, StoppingRule{iterations, std::nullopt}, residual);
      e.final_residual = std::min(run.trace.rows.back().residual, residual(alg.current()));
    } catch (const NumericalDivergence&) {
    }
    if (e.final_residual < best) {
      best = e.final_residual;
      out.best_ratio = r;
    }
    out.entries.push_back(e);
  }
  out.steps = PdhgStepSizes::from_ratio(out.best_ratio, L);
  return out;
}

}  // namespace adarestart::harness
