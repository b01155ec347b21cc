#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

namespace adarestart {

using Vector = Eigen::VectorXd;

// A point w = (x, y) of W = X x Y. Pure minimization problems carry an
// empty dual block.
struct PrimalDualPoint {
  Vector x;
  Vector y;

  PrimalDualPoint() = default;
  PrimalDualPoint(Vector primal, Vector dual)
      : x(std::move(primal)), y(std::move(dual)) {}

  static PrimalDualPoint zeros(Eigen::Index n, Eigen::Index m) {
    return {Vector::Zero(n), Vector::Zero(m)};
  }
  static PrimalDualPoint primal_only(Vector primal) {
    return {std::move(primal), Vector()};
  }

  Eigen::Index primal_size() const { return x.size(); }
  Eigen::Index dual_size() const { return y.size(); }

  bool all_finite() const { return x.allFinite() && y.allFinite(); }

  bool same_shape(const PrimalDualPoint& other) const {
    return x.size() == other.x.size() && y.size() == other.y.size();
  }

  friend bool operator==(const PrimalDualPoint& a, const PrimalDualPoint& b) {
    return a.same_shape(b) && a.x == b.x && a.y == b.y;
  }
};

// Weighted Euclidean norm on W:
//   ||w|| = sqrt(primal_weight * ||w_x||^2 + dual_weight * ||w_y||^2).
// PDHG with step sizes (gx, gy) measures distances with weights (1/gx, 1/gy).
struct NormSpec {
  double primal_weight = 1.0;
  double dual_weight = 1.0;

  NormSpec() = default;
  NormSpec(double primal, double dual) : primal_weight(primal), dual_weight(dual) {
    if (!(primal > 0.0) || !(dual > 0.0) || !std::isfinite(primal) || !std::isfinite(dual)) {
      throw std::invalid_argument("NormSpec weights must be positive and finite");
    }
  }

  static NormSpec euclidean() { return {}; }

  double norm(const PrimalDualPoint& w) const {
    return std::sqrt(primal_weight * w.x.squaredNorm() + dual_weight * w.y.squaredNorm());
  }

  double distance(const PrimalDualPoint& a, const PrimalDualPoint& b) const {
    if (!a.same_shape(b)) throw std::invalid_argument("distance: point shapes differ");
    return std::sqrt(primal_weight * (a.x - b.x).squaredNorm() +
                     dual_weight * (a.y - b.y).squaredNorm());
  }
};

}  // namespace adarestart
