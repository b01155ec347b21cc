#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "adarestart/core/point.hpp"
#include "adarestart/saddle/problem.hpp"

namespace adarestart {

struct PdhgStepSizes {
  double primal = 0.0;
  double dual = 0.0;

  // gamma_x = ratio * gamma_y with gamma_x * gamma_y * L^2 = scale < 1.
  static PdhgStepSizes from_ratio(double ratio, double op_norm, double scale = 0.9) {
    if (!(ratio > 0.0) || !(op_norm > 0.0)) throw std::invalid_argument("from_ratio: need ratio, op_norm > 0");
    const double dual = std::sqrt(scale / ratio) / op_norm;
    return {ratio * dual, dual};
  }
  static PdhgStepSizes equal(double step) { return {step, step}; }
};

// Iteration state between two restarts. average is the arithmetic mean of
// the current iterates u^1..u^t; it is meaningless while t == 0.
struct PdhgState {
  PrimalDualPoint average;
  PrimalDualPoint current;
  Eigen::VectorXd extrapolated_primal;
  std::int64_t t = 0;
  PdhgStepSizes steps;
};

inline void check_pdhg_steps(const PdhgStepSizes& steps, double op_norm) {
  if (!(steps.primal > 0.0) || !(steps.dual > 0.0)) {
    throw std::invalid_argument("PDHG step sizes must be positive");
  }
  if (!(steps.primal * steps.dual * op_norm * op_norm < 1.0)) {
    throw std::invalid_argument("PDHG step sizes violate gamma_x * gamma_y * ||K||^2 < 1");
  }
}

inline PdhgState pdhg_init(const PrimalDualPoint& omega, const PdhgStepSizes& steps) {
  PdhgState state;
  state.average = PrimalDualPoint::zeros(omega.primal_size(), omega.dual_size());
  state.current = omega;
  state.extrapolated_primal = omega.x;
  state.t = 0;
  state.steps = steps;
  return state;
}

// One PDHG iteration: dual prox at the extrapolated primal point, primal prox
// against the new dual iterate, extrapolation x^ = 2 x+ - x, and a running
// mean of the u-iterates.
template <SaddleOracle Oracle>
void pdhg_step(PdhgState& state, const Oracle& oracle) {
  const double gx = state.steps.primal;
  const double gy = state.steps.dual;
  Eigen::VectorXd y_next =
      oracle.prox_dual(state.current.y + gy * oracle.apply(state.extrapolated_primal), gy);
  Eigen::VectorXd x_next = oracle.prox_primal(state.current.x - gx * oracle.apply_adjoint(y_next), gx);
  state.extrapolated_primal = 2.0 * x_next - state.current.x;
  state.current.x = std::move(x_next);
  state.current.y = std::move(y_next);
  ++state.t;
  const double weight = 1.0 / static_cast<double>(state.t);
  state.average.x += weight * (state.current.x - state.average.x);
  state.average.y += weight * (state.current.y - state.average.y);
}

// PDHG as a restartable inner algorithm. Distances use the weighted norm
// with weights (1/gamma_x, 1/gamma_y).
template <SaddleOracle Oracle>
class Pdhg {
 public:
  Pdhg(const Oracle& oracle, PdhgStepSizes steps, double op_norm)
      : oracle_(&oracle), steps_(steps), op_norm_(op_norm) {
    check_pdhg_steps(steps_, op_norm_);
  }

  void initialize(const PrimalDualPoint& omega) {
    if (omega.primal_size() != oracle_->primal_dim() || omega.dual_size() != oracle_->dual_dim()) {
      throw std::invalid_argument("PDHG: starting point has the wrong shape");
    }
    state_ = pdhg_init(omega, steps_);
  }
  void step() { pdhg_step(state_, *oracle_); }

  const PrimalDualPoint& candidate() const { return state_.t > 0 ? state_.average : state_.current; }
  const PrimalDualPoint& current() const { return state_.current; }
  const PdhgState& state() const { return state_; }
  NormSpec norm() const { return {1.0 / steps_.primal, 1.0 / steps_.dual}; }
  const PdhgStepSizes& steps() const { return steps_; }
  double op_norm() const { return op_norm_; }

  // (1 - gamma_x gamma_y L^2)^(-1/2): bound on ||w^t - w*|| / ||omega - w*||.
  double contraction_factor() const {
    return 1.0 / std::sqrt(1.0 - steps_.primal * steps_.dual * op_norm_ * op_norm_);
  }

 private:
  const Oracle* oracle_;
  PdhgStepSizes steps_;
  double op_norm_;
  PdhgState state_;
};

}  // namespace adarestart
