#pragma once

#include <concepts>

#include <Eigen/Core>

namespace adarestart {

// f(x) = a(x) + b(x) with a smooth and b possibly nonsmooth. prox(z, s) must
// return argmin_x b(x) + ||x - z||^2 / (2 s).
template <class O>
concept CompositeObjective = requires(const O& o, const Eigen::VectorXd& x, double s) {
  { o.dimension() } -> std::convertible_to<Eigen::Index>;
  { o.smooth_value(x) } -> std::convertible_to<double>;
  { o.smooth_gradient(x) } -> std::convertible_to<Eigen::VectorXd>;
  { o.nonsmooth_value(x) } -> std::convertible_to<double>;
  { o.prox(x, s) } -> std::convertible_to<Eigen::VectorXd>;
};

template <CompositeObjective O>
double objective_value(const O& obj, const Eigen::VectorXd& x) {
  return obj.smooth_value(x) + obj.nonsmooth_value(x);
}

// p_ell(v) = argmin_x grad a(v)^T (x - v) + b(x) + (ell / 2) ||x - v||^2.
template <CompositeObjective O>
Eigen::VectorXd prox_gradient_point(const O& obj, const Eigen::VectorXd& v,
                                    const Eigen::VectorXd& grad_v, double ell) {
  return obj.prox(v - grad_v / ell, 1.0 / ell);
}

}  // namespace adarestart
