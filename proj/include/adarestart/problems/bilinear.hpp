#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/SVD>

#include "adarestart/core/point.hpp"
#include "adarestart/numerics/sparse.hpp"
#include "adarestart/problems/random.hpp"
#include "adarestart/saddle/problem.hpp"

namespace adarestart::problems {

// Unconstrained bilinear game f(x, y) = c^T x + y^T A x + b^T y over
// R^n x R^m. The solution set is W* = (x_p + null(A)) x (y_p + null(A^T));
// it is described by a particular solution and orthonormal bases of the row
// and column spaces of A.
struct BilinearInstance {
  DenseMatrix A;  // m x n
  Eigen::VectorXd c;
  Eigen::VectorXd b;
  std::uint64_t seed = 0;

  Eigen::VectorXd x_particular;
  Eigen::VectorXd y_particular;
  DenseMatrix row_basis;  // n x r, spans range(A^T)
  DenseMatrix col_basis;  // m x r, spans range(A)
  double sigma_min = 0.0;
  double sigma_max = 0.0;

  Eigen::Index primal_dim() const { return A.cols(); }
  Eigen::Index dual_dim() const { return A.rows(); }
  Eigen::Index rank() const { return row_basis.cols(); }
  PrimalDualPoint particular_solution() const { return {x_particular, y_particular}; }
};

// Completes the solution-set descriptor. Throws if the game has no saddle
// point (A x = -b or A^T y = -c inconsistent) or A is zero.
inline BilinearInstance make_bilinear(DenseMatrix a, Eigen::VectorXd c, Eigen::VectorXd b,
                                      std::uint64_t seed = 0, double rank_tol = 1e-9) {
  if (c.size() != a.cols() || b.size() != a.rows()) throw std::invalid_argument("make_bilinear: dimension mismatch");
  BilinearInstance inst;
  inst.A = std::move(a);
  inst.c = std::move(c);
  inst.b = std::move(b);
  inst.seed = seed;

  Eigen::JacobiSVD<DenseMatrix> svd(inst.A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s.size() == 0 || !(s[0] > 0.0)) throw std::invalid_argument("make_bilinear: zero matrix");
  Eigen::Index r = 0;
  while (r < s.size() && s[r] > rank_tol * s[0]) ++r;
  inst.sigma_max = s[0];
  inst.sigma_min = s[r - 1];
  inst.col_basis = svd.matrixU().leftCols(r);
  inst.row_basis = svd.matrixV().leftCols(r);
  const Eigen::VectorXd inv_s = s.head(r).cwiseInverse();
  inst.x_particular = -(inst.row_basis * (inv_s.asDiagonal() * (inst.col_basis.transpose() * inst.b)));
  inst.y_particular = -(inst.col_basis * (inv_s.asDiagonal() * (inst.row_basis.transpose() * inst.c)));

  const double scale = 1.0 + inst.b.norm() + inst.c.norm();
  if ((inst.A * inst.x_particular + inst.b).norm() > 1e-8 * scale ||
      (inst.A.transpose() * inst.y_particular + inst.c).norm() > 1e-8 * scale) {
    throw std::invalid_argument("make_bilinear: the game has no saddle point");
  }
  return inst;
}

// Random instance with prescribed rank and extreme singular values. A saddle
// point (x*, y*) is planted by setting c = -A^T y*, b = -A x*.
inline BilinearInstance generate_bilinear(Eigen::Index m, Eigen::Index n, Eigen::Index rank,
                                          double sigma_min, double sigma_max, std::uint64_t seed) {
  if (m < 1 || n < 1 || rank < 1 || rank > std::min(m, n)) {
    throw std::invalid_argument("generate_bilinear: need 1 <= rank <= min(m, n)");
  }
  if (!(sigma_min > 0.0) || sigma_min > sigma_max) {
    throw std::invalid_argument("generate_bilinear: need 0 < sigma_min <= sigma_max");
  }
  Rng rng(seed);
  const DenseMatrix u = random_orthogonal(m, rng);
  const DenseMatrix v = random_orthogonal(n, rng);
  Eigen::VectorXd s(rank);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  s[0] = sigma_max;
  if (rank > 1) s[rank - 1] = sigma_min;
  for (Eigen::Index i = 1; i + 1 < rank; ++i) {
    s[i] = sigma_min * std::pow(sigma_max / sigma_min, unit(rng));
  }
  DenseMatrix a = u.leftCols(rank) * s.asDiagonal() * v.leftCols(rank).transpose();
  const Eigen::VectorXd x_star = gaussian_vector(n, rng);
  const Eigen::VectorXd y_star = gaussian_vector(m, rng);
  Eigen::VectorXd c = -(a.transpose() * y_star);
  Eigen::VectorXd b = -(a * x_star);
  return make_bilinear(std::move(a), std::move(c), std::move(b), seed);
}

inline LinearSaddleProblem to_saddle(const BilinearInstance& inst) {
  return LinearSaddleProblem(sparse_from_dense(inst.A), inst.c, inst.b, Unconstrained{}, Unconstrained{});
}

// Exact localized duality gap: the sup of a linear function over a Euclidean
// ball of radius r around w, r * ||(A^T w_y + c ; A w_x + b)||.
inline double bilinear_localized_gap(const BilinearInstance& inst, const PrimalDualPoint& w, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("bilinear_localized_gap: radius must be positive");
  const Eigen::VectorXd gx = inst.A.transpose() * w.y + inst.c;
  const Eigen::VectorXd gy = inst.A * w.x + inst.b;
  return r * std::sqrt(gx.squaredNorm() + gy.squaredNorm());
}

// ||W* - w||_2: only the row-space (resp. column-space) component of the
// offset from the particular solution is irreducible.
inline double distance_to_solution_set(const BilinearInstance& inst, const PrimalDualPoint& w) {
  const Eigen::VectorXd px = inst.row_basis.transpose() * (w.x - inst.x_particular);
  const Eigen::VectorXd py = inst.col_basis.transpose() * (w.y - inst.y_particular);
  return std::sqrt(px.squaredNorm() + py.squaredNorm());
}

// Euclidean projection of w onto W*.
inline PrimalDualPoint project_to_solution_set(const BilinearInstance& inst, const PrimalDualPoint& w) {
  const Eigen::VectorXd dx = w.x - inst.x_particular;
  const Eigen::VectorXd dy = w.y - inst.y_particular;
  return {w.x - inst.row_basis * (inst.row_basis.transpose() * dx),
          w.y - inst.col_basis * (inst.col_basis.transpose() * dy)};
}

}  // namespace adarestart::problems
