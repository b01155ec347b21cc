#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "adarestart/core/point.hpp"
#include "adarestart/numerics/sparse.hpp"
#include "adarestart/problems/random.hpp"
#include "adarestart/saddle/problem.hpp"

namespace adarestart::problems {

enum class GameFamily { UniformNegative, Normal };

inline std::string_view to_string(GameFamily f) {
  return f == GameFamily::UniformNegative ? "uniform" : "normal";
}

inline GameFamily parse_game_family(std::string_view name) {
  if (name == "uniform") return GameFamily::UniformNegative;
  if (name == "normal") return GameFamily::Normal;
  throw std::invalid_argument("unknown matrix game family: " + std::string(name));
}

// min_x max_y y^T A x over the probability simplices of R^n and R^m.
struct MatrixGameInstance {
  DenseMatrix A;  // m x n
  GameFamily family = GameFamily::Normal;
  std::uint64_t seed = 0;

  Eigen::Index primal_dim() const { return A.cols(); }
  Eigen::Index dual_dim() const { return A.rows(); }
};

// UniformNegative: entries iid uniform on [-1, -1/2]; Normal: iid standard normal.
inline MatrixGameInstance generate_matrix_game(Eigen::Index m, Eigen::Index n, GameFamily family,
                                               std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("matrix game dimensions must be positive");
  Rng rng(seed);
  MatrixGameInstance inst;
  inst.family = family;
  inst.seed = seed;
  inst.A = family == GameFamily::UniformNegative ? uniform_matrix(m, n, -1.0, -0.5, rng)
                                                 : gaussian_matrix(m, n, rng);
  return inst;
}

inline LinearSaddleProblem to_saddle(const MatrixGameInstance& inst) {
  return LinearSaddleProblem(sparse_from_dense(inst.A), Eigen::VectorXd::Zero(inst.primal_dim()),
                             Eigen::VectorXd::Zero(inst.dual_dim()), Simplex{}, Simplex{});
}

inline PrimalDualPoint uniform_strategies(const MatrixGameInstance& inst) {
  return {Eigen::VectorXd::Constant(inst.primal_dim(), 1.0 / static_cast<double>(inst.primal_dim())),
          Eigen::VectorXd::Constant(inst.dual_dim(), 1.0 / static_cast<double>(inst.dual_dim()))};
}

// Saddle-point residual over the full simplices, max_i (A x)_i - min_j (A^T y)_j.
inline double matrix_game_residual(const MatrixGameInstance& inst, const PrimalDualPoint& w,
                                   double feas_tol = 1e-9) {
  if (w.x.size() != inst.primal_dim() || w.y.size() != inst.dual_dim()) {
    throw std::invalid_argument("matrix_game_residual: dimension mismatch");
  }
  if (!set_contains(Simplex{}, w.x, feas_tol) || !set_contains(Simplex{}, w.y, feas_tol)) {
    throw std::invalid_argument("matrix_game_residual: point is not on the simplices");
  }
  const double best_response_y = (inst.A * w.x).maxCoeff();
  const double best_response_x = (inst.A.transpose() * w.y).minCoeff();
  return best_response_y - best_response_x;
}

}  // namespace adarestart::problems
