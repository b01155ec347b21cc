#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>
#include <Eigen/QR>

namespace adarestart::problems {

using Rng = std::mt19937_64;

inline Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd a(rows, cols);
  // Column-major fill order keeps generated instances stable across platforms
  // sharing libstdc++'s normal_distribution.
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = normal(rng);
  return a;
}

inline Eigen::VectorXd gaussian_vector(Eigen::Index n, Rng& rng) {
  return gaussian_matrix(n, 1, rng).col(0);
}

inline Eigen::MatrixXd uniform_matrix(Eigen::Index rows, Eigen::Index cols, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> uniform(lo, hi);
  Eigen::MatrixXd a(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = uniform(rng);
  return a;
}

// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the signs
// of R's diagonal folded into Q.
inline Eigen::MatrixXd random_orthogonal(Eigen::Index n, Rng& rng) {
  const Eigen::MatrixXd g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

}  // namespace adarestart::problems
