#pragma once

#include <cstdint>
#include <stdexcept>

#include "adarestart/core/point.hpp"
#include "adarestart/saddle/problem.hpp"

namespace adarestart {

enum class ExtragradientAverage {
  Iterates,   // mean of u^1..u^t
  Lookahead,  // mean of the half-step points v^1..v^t (classic mirror-prox)
};

struct ExtragradientState {
  PrimalDualPoint average;
  PrimalDualPoint current;
  std::int64_t t = 0;
  double step = 0.0;
};

inline ExtragradientState extragradient_init(const PrimalDualPoint& omega, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("extragradient step must be positive");
  ExtragradientState state;
  state.average = PrimalDualPoint::zeros(omega.primal_size(), omega.dual_size());
  state.current = omega;
  state.t = 0;
  state.step = step;
  return state;
}

namespace detail {
// argmin_{w in W} g^T w + ||w - u||^2 / step = P_W(u - (step / 2) g)
template <MonotoneOracle Oracle>
PrimalDualPoint penalized_step(const Oracle& oracle, const PrimalDualPoint& u,
                               const PrimalDualPoint& g, double step) {
  const double h = 0.5 * step;
  return oracle.project(PrimalDualPoint(u.x - h * g.x, u.y - h * g.y));
}
}  // namespace detail

template <MonotoneOracle Oracle>
void extragradient_step(ExtragradientState& state, const Oracle& oracle,
                        ExtragradientAverage averaging = ExtragradientAverage::Iterates) {
  PrimalDualPoint v = detail::penalized_step(oracle, state.current, oracle.gradient_map(state.current), state.step);
  PrimalDualPoint next = detail::penalized_step(oracle, state.current, oracle.gradient_map(v), state.step);
  ++state.t;
  const double weight = 1.0 / static_cast<double>(state.t);
  const PrimalDualPoint& sample = averaging == ExtragradientAverage::Iterates ? next : v;
  state.average.x += weight * (sample.x - state.average.x);
  state.average.y += weight * (sample.y - state.average.y);
  state.current = std::move(next);
}

template <MonotoneOracle Oracle>
class Extragradient {
 public:
  // step must lie in (0, 1/L] for an L-smooth objective.
  Extragradient(const Oracle& oracle, double step,
                ExtragradientAverage averaging = ExtragradientAverage::Iterates)
      : oracle_(&oracle), step_(step), averaging_(averaging) {
    if (!(step_ > 0.0)) throw std::invalid_argument("extragradient step must be positive");
  }

  void initialize(const PrimalDualPoint& omega) { state_ = extragradient_init(omega, step_); }
  void step() { extragradient_step(state_, *oracle_, averaging_); }

  const PrimalDualPoint& candidate() const { return state_.t > 0 ? state_.average : state_.current; }
  const PrimalDualPoint& current() const { return state_.current; }
  const ExtragradientState& state() const { return state_; }
  NormSpec norm() const { return NormSpec::euclidean(); }
  double step_size() const { return step_; }

 private:
  const Oracle* oracle_;
  double step_;
  ExtragradientAverage averaging_;
  ExtragradientState state_;
};

}  // namespace adarestart
