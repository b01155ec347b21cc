#pragma once

#include <stdexcept>

#include <Eigen/Core>

namespace adarestart::problems {

// f(x) = sum_i i * h_delta(x_i) + (alpha / 2) ||x||^2 with the 1-smooth
// convex Huber-like piece
//   h_delta(s) = s^2 / 2                 for s >= -delta
//              = -delta s - delta^2 / 2  for s <  -delta.
// f is (n + alpha)-smooth and alpha-strongly convex with minimizer 0; the
// curvature jump at -delta makes f rise often along accelerated trajectories.
struct HardExampleInstance {
  Eigen::Index n = 500;
  double delta = 1e-4;
  double alpha = 1e-4;

  Eigen::VectorXd start() const { return Eigen::VectorXd::Constant(n, -1.0); }
};

inline double huber_piece(double s, double delta) {
  return s >= -delta ? 0.5 * s * s : -delta * s - 0.5 * delta * delta;
}

inline double huber_piece_derivative(double s, double delta) { return s >= -delta ? s : -delta; }

class HardExampleObjective {
 public:
  explicit HardExampleObjective(HardExampleInstance inst) : inst_(inst) {
    if (inst_.n < 1 || !(inst_.delta > 0.0) || !(inst_.alpha >= 0.0)) {
      throw std::invalid_argument("HardExampleObjective: need n >= 1, delta > 0, alpha >= 0");
    }
  }

  Eigen::Index dimension() const { return inst_.n; }

  double smooth_value(const Eigen::VectorXd& x) const {
    double total = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      total += static_cast<double>(i + 1) * huber_piece(x[i], inst_.delta);
    }
    return total + 0.5 * inst_.alpha * x.squaredNorm();
  }

  Eigen::VectorXd smooth_gradient(const Eigen::VectorXd& x) const {
    Eigen::VectorXd g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      g[i] = static_cast<double>(i + 1) * huber_piece_derivative(x[i], inst_.delta) + inst_.alpha * x[i];
    }
    return g;
  }

  double nonsmooth_value(const Eigen::VectorXd&) const { return 0.0; }
  Eigen::VectorXd prox(const Eigen::VectorXd& z, double) const { return z; }

  double smoothness() const { return static_cast<double>(inst_.n) + inst_.alpha; }
  double strong_convexity() const { return inst_.alpha; }
  double optimal_value() const { return 0.0; }
  const HardExampleInstance& instance() const { return inst_; }

 private:
  HardExampleInstance inst_;
};

inline HardExampleObjective hard_example_oracle(const HardExampleInstance& inst) {
  return HardExampleObjective(inst);
}

}  // namespace adarestart::problems
