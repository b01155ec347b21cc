#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "adarestart/core/point.hpp"
#include "adarestart/smooth/objective.hpp"

namespace adarestart {

inline constexpr int kMaxBacktracks = 200;

class BacktrackingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AgdState {
  Eigen::VectorXd w;
  Eigen::VectorXd v;
  double lambda = 1.0;
  double ell = 1.0;
  double eta = 1.25;
  std::int64_t t = 0;
  std::int64_t backtracks = 0;        // total increases of ell in this epoch
  std::int64_t smooth_evaluations = 0;  // gradient + value calls, cumulative
};

inline AgdState agd_init(const Eigen::VectorXd& omega, double ell, double eta) {
  if (!omega.allFinite()) throw std::invalid_argument("agd_init: non-finite start");
  if (!(ell > 0.0)) throw std::invalid_argument("agd_init: ell must be positive");
  if (!(eta > 1.0)) throw std::invalid_argument("agd_init: eta must exceed 1");
  AgdState s;
  s.w = omega;
  s.v = omega;
  s.lambda = 1.0;
  s.ell = ell;
  s.eta = eta;
  return s;
}

inline double next_lambda(double lambda) { return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * lambda * lambda)); }

// Sufficient-decrease test of the backtracking line search,
//   a(p) <= a(v) + (p - v)^T grad a(v) + (ell / 2) ||p - v||^2,
// with a floating-point allowance proportional to the magnitudes involved.
inline bool majorization_holds(double a_p, double a_v, double linear, double quadratic) {
  const double rhs = a_v + linear + quadratic;
  const double scale = std::abs(a_p) + std::abs(a_v) + std::abs(linear) + std::abs(quadratic);
  return a_p <= rhs + 8.0 * std::numeric_limits<double>::epsilon() * scale;
}

// One FISTA step with backtracking: the smallest k >= 0 such that ell * eta^k
// passes the majorization test is accepted and kept as the new ell.
template <CompositeObjective O>
void agd_step(AgdState& s, const O& obj) {
  const Eigen::VectorXd grad = obj.smooth_gradient(s.v);
  const double a_v = obj.smooth_value(s.v);
  s.smooth_evaluations += 2;
  double ell = s.ell;
  Eigen::VectorXd p;
  for (int k = 0;; ++k) {
    if (k > kMaxBacktracks) throw BacktrackingFailure("backtracking exceeded the maximum number of increases");
    p = prox_gradient_point(obj, s.v, grad, ell);
    const Eigen::VectorXd d = p - s.v;
    const double a_p = obj.smooth_value(p);
    ++s.smooth_evaluations;
    if (majorization_holds(a_p, a_v, d.dot(grad), 0.5 * ell * d.squaredNorm())) break;
    ell *= s.eta;
    ++s.backtracks;
  }
  const double lambda_next = next_lambda(s.lambda);
  Eigen::VectorXd v_next = p + ((s.lambda - 1.0) / lambda_next) * (p - s.w);
  s.w = std::move(p);
  s.v = std::move(v_next);
  s.lambda = lambda_next;
  s.ell = ell;
  ++s.t;
}

struct FistaSettings {
  double initial_ell = 1.0;  // ell_0^0
  double eta = 1.25;
  // false: carry the last accepted ell into the next epoch; true: restart from initial_ell.
  bool reset_ell_on_restart = false;
};

// FISTA with backtracking as a restartable inner algorithm over W = X.
template <CompositeObjective O>
class Fista {
 public:
  explicit Fista(const O& obj, FistaSettings settings = {})
      : obj_(&obj), settings_(settings), ell_(settings.initial_ell) {
    if (!(settings_.initial_ell > 0.0)) throw std::invalid_argument("Fista: initial ell must be positive");
    if (!(settings_.eta > 1.0)) throw std::invalid_argument("Fista: eta must exceed 1");
  }

  void initialize(const PrimalDualPoint& omega) {
    if (omega.primal_size() != obj_->dimension()) throw std::invalid_argument("Fista: wrong start dimension");
    if (initialized_ && !settings_.reset_ell_on_restart) ell_ = state_.ell;
    if (settings_.reset_ell_on_restart) ell_ = settings_.initial_ell;
    const std::int64_t evaluations = state_.smooth_evaluations;
    state_ = agd_init(omega.x, ell_, settings_.eta);
    state_.smooth_evaluations = evaluations;
    point_ = omega;
    objective_ = objective_value(*obj_, state_.w);
    initialized_ = true;
  }

  void step() {
    agd_step(state_, *obj_);
    point_.x = state_.w;
    objective_ = objective_value(*obj_, state_.w);
  }

  const PrimalDualPoint& candidate() const { return point_; }
  const PrimalDualPoint& current() const { return point_; }
  double objective() const { return objective_; }
  NormSpec norm() const { return NormSpec::euclidean(); }
  const AgdState& state() const { return state_; }
  const FistaSettings& settings() const { return settings_; }

 private:
  const O* obj_;
  FistaSettings settings_;
  double ell_;
  bool initialized_ = false;
  AgdState state_;
  PrimalDualPoint point_;
  double objective_ = 0.0;
};

}  // namespace adarestart
