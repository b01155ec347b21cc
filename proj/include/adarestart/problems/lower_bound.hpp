#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>

namespace adarestart::problems {

// Worst-case bilinear instance for span-restricted saddle-point methods:
//   A = sqrt(((gmax^2 - gmin^2) / 4) T + gmin^2 I),  b = 2 (A^T)^{-1} e_1,
// with T the k x k tridiagonal matrix (2 on the diagonal, -1 beside it).
struct LowerBoundInstance {
  Eigen::Index k = 2;
  double gamma_min = 1.0;
  double gamma_max = 2.0;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
};

// Eigenpairs of T are known in closed form: lambda_j = 2 - 2 cos(j pi / (k+1)),
// v_j(i) = sqrt(2 / (k+1)) sin(i j pi / (k+1)), i, j = 1..k.
inline LowerBoundInstance lower_bound_instance(Eigen::Index k, double gamma_min, double gamma_max) {
  if (k < 2) throw std::invalid_argument("lower_bound_instance: k must be >= 2");
  if (!(gamma_min > 0.0) || gamma_min > gamma_max) {
    throw std::invalid_argument("lower_bound_instance: need 0 < gamma_min <= gamma_max");
  }
  const double kp1 = static_cast<double>(k + 1);
  Eigen::MatrixXd basis(k, k);
  Eigen::VectorXd root(k);
  const double spread = (gamma_max * gamma_max - gamma_min * gamma_min) / 4.0;
  for (Eigen::Index j = 1; j <= k; ++j) {
    const double angle = static_cast<double>(j) * std::numbers::pi / kp1;
    const double lambda_t = 2.0 - 2.0 * std::cos(angle);
    root[j - 1] = std::sqrt(spread * lambda_t + gamma_min * gamma_min);
    for (Eigen::Index i = 1; i <= k; ++i) {
      basis(i - 1, j - 1) = std::sqrt(2.0 / kp1) * std::sin(static_cast<double>(i * j) * std::numbers::pi / kp1);
    }
  }
  LowerBoundInstance inst;
  inst.k = k;
  inst.gamma_min = gamma_min;
  inst.gamma_max = gamma_max;
  inst.A = basis * root.asDiagonal() * basis.transpose();
  // A is symmetric, so (A^T)^{-1} e_1 = V diag(1/root) V^T e_1.
  inst.b = 2.0 * (basis * root.cwiseInverse().asDiagonal() * basis.row(0).transpose());
  return inst;
}

inline Eigen::MatrixXd tridiagonal_second_difference(Eigen::Index k) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    t(i, i) = 2.0;
    if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = -1.0;
  }
  return t;
}

}  // namespace adarestart::problems
