#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "adarestart/core/phi.hpp"
#include "adarestart/core/point.hpp"

namespace adarestart {

// Distance-based potential ||w_i^t - omega_{i-1}|| / phi(t).
inline double potential(double dist, std::int64_t t, PhiFunction phi) {
  if (t < 1) throw std::invalid_argument("potential: t must be >= 1");
  if (!(dist >= 0.0)) throw std::invalid_argument("potential: dist must be nonnegative");
  return dist / phi(static_cast<double>(t));
}

// Adaptive restart test for epochs i > 1:
//   dist_cur / phi(t) <= beta * dist_prev / phi(tau_prev).
// When dist_prev == 0 the right side is zero and only dist_cur == 0 fires.
inline bool restart_triggered(double dist_cur, std::int64_t t, double dist_prev,
                              std::int64_t tau_prev, double beta, PhiFunction phi) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("restart_triggered: beta must lie in (0,1)");
  if (t < 1 || tau_prev < 1) throw std::invalid_argument("restart_triggered: t and tau_prev must be >= 1");
  return potential(dist_cur, t, phi) <= beta * potential(dist_prev, tau_prev, phi);
}

// O'Donoghue-Candes heuristic: restart when the objective rises. Ties do not restart.
inline bool function_scheme_triggered(double f_curr, double f_prev) { return f_curr > f_prev; }

struct NoRestart {};

struct FixedPeriod {
  std::int64_t period = 1;
};

struct AdaptiveRestart {
  double beta = 0.5;
  PhiFunction phi = PhiFunction::linear();
  // tau_1: epoch 1 has no previous epoch to compare against and ends here.
  std::int64_t first_epoch_length = 1;
};

struct FunctionScheme {};

using RestartPolicy = std::variant<NoRestart, FixedPeriod, AdaptiveRestart, FunctionScheme>;

inline std::string policy_name(const RestartPolicy& policy) {
  struct Visitor {
    std::string operator()(const NoRestart&) const { return "none"; }
    std::string operator()(const FixedPeriod& p) const { return "fixed(" + std::to_string(p.period) + ")"; }
    std::string operator()(const AdaptiveRestart&) const { return "adaptive"; }
    std::string operator()(const FunctionScheme&) const { return "function"; }
  };
  return std::visit(Visitor{}, policy);
}

inline void validate_policy(const RestartPolicy& policy) {
  if (const auto* fixed = std::get_if<FixedPeriod>(&policy)) {
    if (fixed->period < 1) throw std::invalid_argument("fixed restart period must be >= 1");
  } else if (const auto* adaptive = std::get_if<AdaptiveRestart>(&policy)) {
    if (!(adaptive->beta > 0.0 && adaptive->beta < 1.0)) {
      throw std::invalid_argument("adaptive restart beta must lie in (0,1)");
    }
    if (adaptive->first_epoch_length < 1) {
      throw std::invalid_argument("adaptive restart first epoch length must be >= 1");
    }
  }
}

// Epoch bookkeeping for the restart loop: omega_{i-1}, omega_{i-2}, tau_{i-1},
// the epoch index i and the distance norm.
class RestartController {
 public:
  struct Decision {
    bool restart = false;
    std::optional<double> potential;
  };

  RestartController(RestartPolicy policy, NormSpec norm) : policy_(policy), norm_(norm) {
    validate_policy(policy_);
  }

  void begin(const PrimalDualPoint& omega0) {
    omega_prev_ = omega0;
    omega_prev2_.reset();
    tau_prev_ = 0;
    dist_prev_ = 0.0;
    epoch_ = 1;
    last_objective_.reset();
  }

  // Baseline objective for the function scheme, f(w_i^0) = f(omega_{i-1}).
  void note_objective(double f) { last_objective_ = f; }

  Decision evaluate(std::int64_t t, const PrimalDualPoint& candidate,
                    std::optional<double> objective = std::nullopt) {
    Decision decision;
    if (std::holds_alternative<NoRestart>(policy_)) {
      return decision;
    }
    if (const auto* fixed = std::get_if<FixedPeriod>(&policy_)) {
      decision.restart = t >= fixed->period;
      return decision;
    }
    if (std::holds_alternative<FunctionScheme>(policy_)) {
      if (!objective) throw std::logic_error("function restart scheme needs objective values");
      decision.restart = last_objective_ && function_scheme_triggered(*objective, *last_objective_);
      last_objective_ = objective;
      return decision;
    }
    const auto& adaptive = std::get<AdaptiveRestart>(policy_);
    const double dist_cur = norm_.distance(candidate, omega_prev_);
    decision.potential = potential(dist_cur, t, adaptive.phi);
    if (epoch_ == 1) {
      decision.restart = t >= adaptive.first_epoch_length;
    } else {
      decision.restart =
          restart_triggered(dist_cur, t, dist_prev_, tau_prev_, adaptive.beta, adaptive.phi);
    }
    return decision;
  }

  // Closes epoch i with tau_i = t and omega_i = candidate.
  void commit_restart(const PrimalDualPoint& candidate, std::int64_t t) {
    dist_prev_ = norm_.distance(candidate, omega_prev_);
    omega_prev2_ = std::move(omega_prev_);
    omega_prev_ = candidate;
    tau_prev_ = t;
    ++epoch_;
    last_objective_.reset();
  }

  const RestartPolicy& policy() const { return policy_; }
  const NormSpec& norm() const { return norm_; }
  std::int64_t epoch() const { return epoch_; }
  std::int64_t tau_prev() const { return tau_prev_; }
  double dist_prev() const { return dist_prev_; }
  const PrimalDualPoint& omega_prev() const { return omega_prev_; }
  const std::optional<PrimalDualPoint>& omega_prev2() const { return omega_prev2_; }

 private:
  RestartPolicy policy_;
  NormSpec norm_;
  PrimalDualPoint omega_prev_;
  std::optional<PrimalDualPoint> omega_prev2_;
  std::int64_t tau_prev_ = 0;
  double dist_prev_ = 0.0;
  std::int64_t epoch_ = 1;
  std::optional<double> last_objective_;
};

}  // namespace adarestart
