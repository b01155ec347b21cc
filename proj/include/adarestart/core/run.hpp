#pragma once

#include <chrono>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "adarestart/core/point.hpp"
#include "adarestart/core/restart.hpp"
#include "adarestart/core/trace.hpp"

namespace adarestart {

// An inner algorithm restartable from any point. candidate() is the output
// w_i^t carrying the sublinear guarantee (running average for the saddle
// methods, the prox-gradient iterate for FISTA).
template <class A>
concept InnerAlgorithm = requires(A& alg, const A& calg, const PrimalDualPoint& w) {
  alg.initialize(w);
  alg.step();
  { calg.candidate() } -> std::convertible_to<const PrimalDualPoint&>;
  { calg.norm() } -> std::convertible_to<NormSpec>;
};

template <class A>
concept HasObjective = requires(const A& alg) {
  { alg.objective() } -> std::convertible_to<double>;
};

template <class A>
concept HasCurrentIterate = requires(const A& alg) {
  { alg.current() } -> std::convertible_to<const PrimalDualPoint&>;
};

struct StoppingRule {
  std::int64_t max_iterations = 1000;
  std::optional<double> target;
};

struct RunOptions {
  // Also evaluate the residual at the algorithm's current iterate.
  bool track_current_residual = false;
  bool record_wall_time = false;
};

struct RunResult {
  PrimalDualPoint best;  // candidate with the smallest recorded residual
  double best_residual = std::numeric_limits<double>::infinity();
  PrimalDualPoint last;  // candidate at the final iteration
  SolverTrace trace;
  std::int64_t iterations = 0;
  std::optional<std::int64_t> iterations_to_target;

  bool reached_target() const { return iterations_to_target.has_value(); }
};

class NumericalDivergence : public std::runtime_error {
 public:
  NumericalDivergence(const std::string& what, SolverTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const SolverTrace& trace() const { return trace_; }

 private:
  SolverTrace trace_;
};

struct NullObserver {
  template <class... Args>
  void operator()(const Args&...) const {}
};

// Runs the generic restart loop: each epoch initializes the inner algorithm
// at omega_{i-1}, steps until the policy fires, then records tau_i = t and
// omega_i = w_i^t. Every epoch is bounded only by the global iteration budget.
//
// residual(point) -> double scores candidates for the trace and the target.
// observer(row, alg, controller) is called after every inner iteration.
template <InnerAlgorithm Alg, class Residual, class Observer = NullObserver>
RunResult run_restarted(Alg& alg, const PrimalDualPoint& omega0, const RestartPolicy& policy,
                        const StoppingRule& stop, Residual&& residual,
                        const RunOptions& options = {}, Observer&& observer = {}) {
  if (stop.max_iterations < 1) throw std::invalid_argument("iteration budget must be >= 1");
  if (!omega0.all_finite()) throw std::invalid_argument("starting point has non-finite entries");
  validate_policy(policy);

  const bool function_scheme = std::holds_alternative<FunctionScheme>(policy);
  if constexpr (!HasObjective<Alg>) {
    if (function_scheme) throw std::invalid_argument("function restart scheme needs an objective");
  }

  RestartController controller(policy, alg.norm());
  controller.begin(omega0);
  alg.initialize(omega0);
  if constexpr (HasObjective<Alg>) {
    if (function_scheme) controller.note_objective(alg.objective());
  }

  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();

  RunResult result;
  std::int64_t t = 0;
  for (std::int64_t total = 1; total <= stop.max_iterations; ++total) {
    alg.step();
    ++t;
    const PrimalDualPoint& candidate = alg.candidate();
    if (!candidate.all_finite()) {
      throw NumericalDivergence("non-finite iterate at iteration " + std::to_string(total),
                                std::move(result.trace));
    }

    TraceRow row;
    row.total_iter = total;
    row.epoch = controller.epoch();
    row.inner_iter = t;
    row.residual = residual(candidate);
    if constexpr (HasCurrentIterate<Alg>) {
      if (options.track_current_residual) row.current_residual = residual(alg.current());
    }
    if (options.record_wall_time) {
      row.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    }

    std::optional<double> objective;
    if constexpr (HasObjective<Alg>) {
      if (function_scheme) objective = alg.objective();
    }
    const auto decision = controller.evaluate(t, candidate, objective);
    row.potential = decision.potential;
    row.restarted = decision.restart;

    if (row.residual < result.best_residual || result.best.x.size() + result.best.y.size() == 0) {
      result.best_residual = row.residual;
      result.best = candidate;
    }
    const bool reached = stop.target && row.residual <= *stop.target;
    if (reached && !result.iterations_to_target) result.iterations_to_target = total;

    result.iterations = total;
    if (decision.restart) {
      controller.commit_restart(candidate, t);
    }
    result.trace.rows.push_back(row);
    observer(result.trace.rows.back(), std::as_const(alg), std::as_const(controller));

    if (reached || total == stop.max_iterations) {
      result.last = candidate;
      break;
    }
    if (decision.restart) {
      alg.initialize(controller.omega_prev());
      if constexpr (HasObjective<Alg>) {
        if (function_scheme) controller.note_objective(alg.objective());
      }
      t = 0;
    }
  }
  return result;
}

}  // namespace adarestart
