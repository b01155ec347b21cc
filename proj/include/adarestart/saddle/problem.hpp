#pragma once

#include <concepts>
#include <stdexcept>
#include <variant>

#include <Eigen/Core>

#include "adarestart/core/point.hpp"
#include "adarestart/numerics/prox.hpp"
#include "adarestart/numerics/sparse.hpp"

namespace adarestart {

// Oracle for f(x, y) = y^T K x + G(x) - F*(y). The prox maps solve
//   prox_primal(z, g) = argmin_x G(x)  + ||x - z||^2 / (2 g)
//   prox_dual(z, g)   = argmin_y F*(y) + ||y - z||^2 / (2 g)
// and must return feasible points.
template <class O>
concept SaddleOracle = requires(const O& o, const Eigen::VectorXd& v, double step) {
  { o.primal_dim() } -> std::convertible_to<Eigen::Index>;
  { o.dual_dim() } -> std::convertible_to<Eigen::Index>;
  { o.apply(v) } -> std::convertible_to<Eigen::VectorXd>;
  { o.apply_adjoint(v) } -> std::convertible_to<Eigen::VectorXd>;
  { o.prox_primal(v, step) } -> std::convertible_to<Eigen::VectorXd>;
  { o.prox_dual(v, step) } -> std::convertible_to<Eigen::VectorXd>;
};

// Adds the monotone map g(w) = (grad_x f, -grad_y f) and the projection onto W
// needed by extragradient.
template <class O>
concept MonotoneOracle = SaddleOracle<O> && requires(const O& o, const PrimalDualPoint& w) {
  { o.gradient_map(w) } -> std::convertible_to<PrimalDualPoint>;
  { o.project(w) } -> std::convertible_to<PrimalDualPoint>;
};

struct Unconstrained {};
struct Simplex {};
using FeasibleSet = std::variant<Unconstrained, Simplex, BoxBounds>;

inline Eigen::VectorXd project_onto(const FeasibleSet& set, const Eigen::VectorXd& v) {
  if (std::holds_alternative<Unconstrained>(set)) return v;
  if (std::holds_alternative<Simplex>(set)) return project_simplex(v);
  return project_box(v, std::get<BoxBounds>(set));
}

inline bool set_contains(const FeasibleSet& set, const Eigen::VectorXd& v, double tol) {
  if (std::holds_alternative<Unconstrained>(set)) return v.allFinite();
  if (std::holds_alternative<Simplex>(set)) {
    return (v.array() >= -tol).all() && std::abs(v.sum() - 1.0) <= tol;
  }
  return std::get<BoxBounds>(set).contains(v, tol);
}

// f(x, y) = c^T x + y^T K x + d^T y over X x Y, where X and Y are free,
// a simplex, or a box. Covers matrix games, unconstrained bilinear games and
// the Lagrangian of a box-constrained LP.
class LinearSaddleProblem {
 public:
  LinearSaddleProblem(SparseMatrix k, Eigen::VectorXd c, Eigen::VectorXd d,
                      FeasibleSet primal_set, FeasibleSet dual_set)
      : k_(std::move(k)),
        kt_(k_.transpose()),
        c_(std::move(c)),
        d_(std::move(d)),
        primal_set_(std::move(primal_set)),
        dual_set_(std::move(dual_set)) {
    if (c_.size() != k_.cols() || d_.size() != k_.rows()) {
      throw std::invalid_argument("LinearSaddleProblem: dimension mismatch");
    }
    if (const auto* box = std::get_if<BoxBounds>(&primal_set_); box && box->size() != k_.cols()) {
      throw std::invalid_argument("LinearSaddleProblem: primal bounds size mismatch");
    }
    if (const auto* box = std::get_if<BoxBounds>(&dual_set_); box && box->size() != k_.rows()) {
      throw std::invalid_argument("LinearSaddleProblem: dual bounds size mismatch");
    }
    kt_.makeCompressed();
  }

  Eigen::Index primal_dim() const { return k_.cols(); }
  Eigen::Index dual_dim() const { return k_.rows(); }
  const SparseMatrix& op() const { return k_; }
  const Eigen::VectorXd& primal_linear() const { return c_; }
  const Eigen::VectorXd& dual_linear() const { return d_; }
  const FeasibleSet& primal_set() const { return primal_set_; }
  const FeasibleSet& dual_set() const { return dual_set_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return k_ * x; }
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& y) const { return kt_ * y; }

  Eigen::VectorXd prox_primal(const Eigen::VectorXd& z, double step) const {
    return project_onto(primal_set_, z - step * c_);
  }
  Eigen::VectorXd prox_dual(const Eigen::VectorXd& z, double step) const {
    return project_onto(dual_set_, z + step * d_);
  }

  PrimalDualPoint gradient_map(const PrimalDualPoint& w) const {
    return {c_ + apply_adjoint(w.y), -(apply(w.x) + d_)};
  }

  PrimalDualPoint project(const PrimalDualPoint& w) const {
    return {project_onto(primal_set_, w.x), project_onto(dual_set_, w.y)};
  }

  double value(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return c_.dot(x) + y.dot(apply(x)) + d_.dot(y);
  }

  bool feasible(const PrimalDualPoint& w, double tol = 1e-9) const {
    return w.x.size() == primal_dim() && w.y.size() == dual_dim() &&
           set_contains(primal_set_, w.x, tol) && set_contains(dual_set_, w.y, tol);
  }

 private:
  SparseMatrix k_;
  SparseMatrix kt_;
  Eigen::VectorXd c_;
  Eigen::VectorXd d_;
  FeasibleSet primal_set_;
  FeasibleSet dual_set_;
};

}  // namespace adarestart
