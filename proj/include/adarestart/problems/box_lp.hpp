#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "adarestart/core/point.hpp"
#include "adarestart/numerics/prox.hpp"
#include "adarestart/numerics/sparse.hpp"
#include "adarestart/problems/random.hpp"
#include "adarestart/saddle/problem.hpp"

namespace adarestart::problems {

// min c^T x  s.t.  A x = b,  l <= x <= u.
struct BoxLpInstance {
  Eigen::VectorXd c;
  SparseMatrix A;
  Eigen::VectorXd b;
  BoxBounds bounds;
  std::uint64_t seed = 0;
  // Primal-dual pair the generator built the instance around, when known.
  std::optional<PrimalDualPoint> planted;
  bool planted_is_optimal = false;

  Eigen::Index primal_dim() const { return A.cols(); }
  Eigen::Index dual_dim() const { return A.rows(); }
};

inline void validate(const BoxLpInstance& lp) {
  if (lp.c.size() != lp.A.cols() || lp.b.size() != lp.A.rows() || lp.bounds.size() != lp.A.cols()) {
    throw std::invalid_argument("BoxLpInstance: inconsistent shapes");
  }
  validate_sparse(lp.A);
}

// Saddle form with the conventional Lagrangian sign,
//   f(x, y) = c^T x - y^T A x + b^T y,  X = [l, u],  Y = R^m,
// so that maximizing over y enforces A x = b and r = c - A^T y are the
// reduced costs.
inline LinearSaddleProblem to_saddle(const BoxLpInstance& lp) {
  SparseMatrix k = -lp.A;
  k.makeCompressed();
  return LinearSaddleProblem(std::move(k), lp.c, lp.b, lp.bounds, Unconstrained{});
}

// Transportation-polytope LP on a rows x cols grid of variables x_ij in
// [0, 1]: one equality per grid row and one per grid column, so every
// variable appears in exactly two constraints like in an assignment
// relaxation. b is computed from a planted point so the LP is feasible.
//
// plant_optimal = false: costs are uniform on [0, 1].
// plant_optimal = true: a vertex-like x* (a third of the entries at each
// bound) and a Gaussian y* are planted and c is chosen so that the reduced
// costs certify optimality of (x*, y*).
inline BoxLpInstance generate_transport_lp(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed,
                                           bool plant_optimal = false) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("generate_transport_lp: empty grid");
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Eigen::Index n = rows * cols;
  const Eigen::Index m = rows + cols;

  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(2 * n));
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Eigen::Index var = i * cols + j;
      entries.emplace_back(i, var, 1.0);
      entries.emplace_back(rows + j, var, 1.0);
    }
  }

  BoxLpInstance lp;
  lp.seed = seed;
  lp.A = make_sparse(m, n, entries);
  lp.bounds = BoxBounds::constant(n, 0.0, 1.0);

  Eigen::VectorXd x(n);
  Eigen::VectorXd reduced(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!plant_optimal) {
      x[j] = 0.2 + 0.6 * unit(rng);
      reduced[j] = 0.0;
      continue;
    }
    const double pick = unit(rng);
    if (pick < 1.0 / 3.0) {
      x[j] = 0.0;
      reduced[j] = 0.1 + 0.9 * unit(rng);
    } else if (pick < 2.0 / 3.0) {
      x[j] = 1.0;
      reduced[j] = -(0.1 + 0.9 * unit(rng));
    } else {
      x[j] = 0.1 + 0.8 * unit(rng);
      reduced[j] = 0.0;
    }
  }
  lp.b = lp.A * x;
  if (plant_optimal) {
    const Eigen::VectorXd y = gaussian_vector(m, rng);
    lp.c = lp.A.transpose() * y + reduced;
    lp.planted = PrimalDualPoint(x, y);
    lp.planted_is_optimal = true;
  } else {
    lp.c.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) lp.c[j] = unit(rng);
    lp.planted = PrimalDualPoint(x, Eigen::VectorXd::Zero(m));
  }
  return lp;
}

struct LpResidual {
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  double gap = 0.0;
  double combined = 0.0;
};

// Primal infeasibility ||A x - b||, bound-aware dual infeasibility of the
// reduced costs r = c - A^T y, and the absolute primal-dual objective gap;
// combined is the l2 norm of the three.
inline LpResidual lp_residual(const BoxLpInstance& lp, const PrimalDualPoint& w) {
  if (w.x.size() != lp.primal_dim() || w.y.size() != lp.dual_dim()) {
    throw std::invalid_argument("lp_residual: dimension mismatch");
  }
  LpResidual res;
  res.primal_infeasibility = (lp.A * w.x - lp.b).norm();

  const Eigen::VectorXd r = lp.c - lp.A.transpose() * w.y;
  double dual_sq = 0.0;
  double dual_objective = lp.b.dot(w.y);
  for (Eigen::Index j = 0; j < r.size(); ++j) {
    const bool lower_finite = std::isfinite(lp.bounds.lower[j]);
    const bool upper_finite = std::isfinite(lp.bounds.upper[j]);
    double violation = 0.0;
    if (!lower_finite && !upper_finite) {
      violation = std::abs(r[j]);
    } else if (!upper_finite) {
      violation = std::max(0.0, -r[j]);
    } else if (!lower_finite) {
      violation = std::max(0.0, r[j]);
    }
    dual_sq += violation * violation;
    if (lower_finite && r[j] > 0.0) dual_objective += lp.bounds.lower[j] * r[j];
    if (upper_finite && r[j] < 0.0) dual_objective += lp.bounds.upper[j] * r[j];
  }
  res.dual_infeasibility = std::sqrt(dual_sq);
  res.gap = std::abs(lp.c.dot(w.x) - dual_objective);
  res.combined = std::sqrt(res.primal_infeasibility * res.primal_infeasibility +
                           res.dual_infeasibility * res.dual_infeasibility + res.gap * res.gap);
  return res;
}

}  // namespace adarestart::problems
