#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "adarestart/core/check.hpp"
#include "adarestart/core/trace.hpp"

namespace adarestart::theory {

struct TheoryConstants {
  double L = 1.0;      // smoothness or operator norm
  double theta = 1.0;  // error-bound modulus
  double alpha = 0.0;  // strong convexity
  double eta = 1.0;    // backtracking factor
  double gamma = 0.0;  // step size
  double beta = 0.5;   // restart parameter

  double kappa_bar() const { return L * eta / alpha; }
};

// Sublinear-rate constants C for each inner algorithm.
inline double pdhg_rate_constant(double gamma) { return 1.0 / (2.0 * gamma); }
inline double extragradient_rate_constant(double gamma) { return 2.0 / gamma; }
inline double agd_rate_constant(double L, double eta) { return 2.0 * L * eta; }

inline double kappa_hat(double rate_constant, double theta) {
  if (!(theta > 0.0)) throw std::invalid_argument("kappa_hat: theta must be positive");
  return rate_constant / theta;
}

namespace detail {
inline void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
}
inline void check_epsilon(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
}
}  // namespace detail

inline double pdhg_q(double gamma, double L) {
  if (!(gamma > 0.0) || !(L > 0.0)) throw std::invalid_argument("pdhg_q: gamma and L must be positive");
  if (!(gamma * L < 1.0)) throw std::invalid_argument("pdhg_q: need gamma * L < 1");
  return 1.0 / std::sqrt(1.0 - gamma * gamma * L * L);
}

inline double t_star_pdhg(const TheoryConstants& c) {
  detail::check_beta(c.beta);
  if (!(c.theta > 0.0)) throw std::invalid_argument("t_star_pdhg: theta must be positive");
  const double q = pdhg_q(c.gamma, c.L);
  const double ratio = (1.0 + c.beta) / c.beta;
  return (1.0 + q) * (1.0 + q) * ratio * ratio / (2.0 * c.gamma * c.theta) + 2.0;
}

inline double t_star_extragradient(const TheoryConstants& c) {
  detail::check_beta(c.beta);
  if (!(c.gamma > 0.0) || !(c.theta > 0.0)) {
    throw std::invalid_argument("t_star_extragradient: gamma and theta must be positive");
  }
  const double ratio = (1.0 + c.beta) / c.beta;
  return 4.0 * ratio * ratio / (c.gamma * c.theta) + 2.0;
}

inline double t_star_agd(double kappa_hat_value, double beta) {
  detail::check_beta(beta);
  if (!(kappa_hat_value > 0.0)) throw std::invalid_argument("t_star_agd: kappa_hat must be positive");
  const double rho = (1.0 + beta) / beta;
  return 1.0 + std::sqrt(kappa_hat_value) * (rho + std::sqrt(rho * rho + 4.0 * rho));
}

// Residual of the defining inequality for AGD,
//   phi(t - 2) / (1 + Q(t - 2))^2 - ((1+beta)/beta)^2 kappa_hat,
// with phi(t) = (t+1)^2 and Q(t) = 2 sqrt(kappa_hat) / (t+1); nonnegative iff t qualifies.
inline double agd_t_star_slack(double t, double kappa_hat_value, double beta) {
  const double s = t - 2.0;
  const double phi = (s + 1.0) * (s + 1.0);
  const double q = 2.0 * std::sqrt(kappa_hat_value) / (s + 1.0);
  const double ratio = (1.0 + beta) / beta;
  return phi / ((1.0 + q) * (1.0 + q)) - ratio * ratio * kappa_hat_value;
}

inline double iteration_budget_pdhg(const TheoryConstants& c, double epsilon, double tau1) {
  detail::check_epsilon(epsilon);
  const double k = c.L / c.theta;
  const double warmup = 57.0 * k * std::log(std::max(1.0, 77.0 * k / tau1));
  return 57.0 * k * std::log(4.0 / epsilon) + std::max(warmup, 2.0 * tau1);
}

inline double iteration_budget_agd(double kappa_bar, double epsilon, double tau1) {
  detail::check_epsilon(epsilon);
  const double root = std::sqrt(kappa_bar);
  const double warmup = 26.0 * root * std::log(12.0 * root / tau1);
  return 8.5 * (root + 1.0) * std::log(8.0 / epsilon) + std::max(warmup, 2.0 * tau1);
}

inline double optimal_fixed_period(double kappa_bar) {
  if (!(kappa_bar >= 1.0)) throw std::invalid_argument("optimal_fixed_period: kappa_bar must be >= 1");
  return 2.0 * std::numbers::e * std::sqrt(kappa_bar);
}

// Heuristic period e sqrt(n / alpha) quoted for the hard example.
inline double hard_example_fixed_period(double n, double alpha) {
  return std::numbers::e * std::sqrt(n / alpha);
}

// Checks tau_i <= max{tau1, ceil(t*)} for every epoch and
// sum_{i<=k} tau_i <= t* k + 2 (tau1 - t*)^+ for every prefix k.
inline CheckReport verify_epoch_bounds(const SolverTrace& trace, double t_star, std::int64_t tau1) {
  CheckReport report;
  report.name = "epoch-bounds";
  const auto lengths = trace.epoch_lengths();
  const double cap = std::max(static_cast<double>(tau1), std::ceil(t_star));
  const double extra = 2.0 * std::max(0.0, static_cast<double>(tau1) - t_star);
  double sum = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double tau = static_cast<double>(lengths[i]);
    report.record(cap, tau);
    sum += tau;
    report.record(t_star * static_cast<double>(i + 1) + extra, sum);
  }
  report.detail = std::to_string(lengths.size()) + " epochs, cap " + std::to_string(cap);
  return report;
}

}  // namespace adarestart::theory
