#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "adarestart/numerics/sparse.hpp"

namespace adarestart {

struct OpNormEstimate {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

inline constexpr std::uint64_t kPowerIterationSeed = 0x5eedULL;

// sigma_max(A) by power iteration on A^T A. The start vector is drawn from a
// fixed seed so repeated calls return identical estimates. Stops when the
// relative change of the estimate falls below tol.
inline OpNormEstimate op_norm(const SparseMatrix& a, double tol = 1e-9, int max_iter = 10000) {
  if (!(tol > 0.0)) throw std::invalid_argument("op_norm: tol must be positive");
  if (a.nonZeros() == 0) throw std::invalid_argument("op_norm: matrix is zero");

  std::mt19937_64 rng(kPowerIterationSeed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(a.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
  v.normalize();

  OpNormEstimate est;
  double previous = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    Eigen::VectorXd av = a * v;
    Eigen::VectorXd w = a.transpose() * av;
    const double rayleigh = av.squaredNorm();  // v^T A^T A v with ||v|| = 1
    est.value = std::sqrt(rayleigh);
    est.iterations = it;
    const double wn = w.norm();
    if (wn == 0.0) {
      // Start vector landed in the null space; restart from a fresh direction.
      for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
      v.normalize();
      continue;
    }
    v = w / wn;
    if (it > 1 && std::abs(est.value - previous) <= tol * est.value) {
      est.converged = true;
      break;
    }
    previous = est.value;
  }
  return est;
}

inline Eigen::VectorXd singular_values(const DenseMatrix& a) {
  Eigen::JacobiSVD<DenseMatrix> svd(a);
  return svd.singularValues();
}

// Smallest singular value above rank_tol * sigma_max, by dense SVD.
inline double min_nonzero_singular_value(const DenseMatrix& a, double rank_tol = 1e-9) {
  if (a.size() == 0) throw std::invalid_argument("min_nonzero_singular_value: empty matrix");
  const Eigen::VectorXd s = singular_values(a);
  const double smax = s.size() > 0 ? s[0] : 0.0;
  if (!(smax > 0.0)) throw std::invalid_argument("min_nonzero_singular_value: zero matrix");
  double smin = smax;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > rank_tol * smax) smin = std::min(smin, s[i]);
  }
  return smin;
}

inline double min_nonzero_singular_value(const SparseMatrix& a, double rank_tol = 1e-9) {
  return min_nonzero_singular_value(DenseMatrix(a), rank_tol);
}

}  // namespace adarestart
