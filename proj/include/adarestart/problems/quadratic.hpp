#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

#include "adarestart/problems/random.hpp"

namespace adarestart::problems {

// f(x) = (x - x*)^T H (x - x*) / 2 with H symmetric positive definite.
class QuadraticObjective {
 public:
  QuadraticObjective(Eigen::MatrixXd hessian, Eigen::VectorXd minimizer, double smoothness, double strong_convexity)
      : h_(std::move(hessian)), x_star_(std::move(minimizer)), smoothness_(smoothness), alpha_(strong_convexity) {
    if (h_.rows() != h_.cols() || h_.rows() != x_star_.size()) {
      throw std::invalid_argument("QuadraticObjective: shape mismatch");
    }
  }

  Eigen::Index dimension() const { return x_star_.size(); }
  double smooth_value(const Eigen::VectorXd& x) const {
    const Eigen::VectorXd d = x - x_star_;
    return 0.5 * d.dot(h_ * d);
  }
  Eigen::VectorXd smooth_gradient(const Eigen::VectorXd& x) const { return h_ * (x - x_star_); }
  double nonsmooth_value(const Eigen::VectorXd&) const { return 0.0; }
  Eigen::VectorXd prox(const Eigen::VectorXd& z, double) const { return z; }

  const Eigen::MatrixXd& hessian() const { return h_; }
  const Eigen::VectorXd& minimizer() const { return x_star_; }
  double smoothness() const { return smoothness_; }
  double strong_convexity() const { return alpha_; }
  double optimal_value() const { return 0.0; }

 private:
  Eigen::MatrixXd h_;
  Eigen::VectorXd x_star_;
  double smoothness_;
  double alpha_;
};

// Eigenvalues log-spaced on [alpha, smoothness] (both attained), optionally
// rotated by a random orthogonal basis; the minimizer is Gaussian.
inline QuadraticObjective make_quadratic(Eigen::Index n, double alpha, double smoothness, std::uint64_t seed,
                                         bool rotate = true) {
  if (n < 2 || !(alpha > 0.0) || alpha > smoothness) {
    throw std::invalid_argument("make_quadratic: need n >= 2 and 0 < alpha <= smoothness");
  }
  Rng rng(seed);
  Eigen::VectorXd eig(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    eig[i] = alpha * std::pow(smoothness / alpha, static_cast<double>(i) / static_cast<double>(n - 1));
  }
  Eigen::MatrixXd h;
  if (rotate) {
    const Eigen::MatrixXd q = random_orthogonal(n, rng);
    h = q * eig.asDiagonal() * q.transpose();
    h = 0.5 * (h + h.transpose()).eval();
  } else {
    h = eig.asDiagonal();
  }
  Eigen::VectorXd x_star = gaussian_vector(n, rng);
  return QuadraticObjective(std::move(h), std::move(x_star), smoothness, alpha);
}

}  // namespace adarestart::problems
