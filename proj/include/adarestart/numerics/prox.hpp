#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace adarestart {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct BoxBounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  BoxBounds() = default;
  BoxBounds(Eigen::VectorXd l, Eigen::VectorXd u) : lower(std::move(l)), upper(std::move(u)) {
    if (lower.size() != upper.size()) throw std::invalid_argument("BoxBounds: size mismatch");
    for (Eigen::Index j = 0; j < lower.size(); ++j) {
      if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j] ||
          lower[j] == kInf || upper[j] == -kInf) {
        throw std::invalid_argument("BoxBounds: need lower <= upper with lower < inf, upper > -inf");
      }
    }
  }

  static BoxBounds constant(Eigen::Index n, double l, double u) {
    return {Eigen::VectorXd::Constant(n, l), Eigen::VectorXd::Constant(n, u)};
  }

  Eigen::Index size() const { return lower.size(); }

  bool contains(const Eigen::VectorXd& v, double tol = 0.0) const {
    return v.size() == size() && ((v.array() >= lower.array() - tol).all()) &&
           ((v.array() <= upper.array() + tol).all());
  }

  friend bool operator==(const BoxBounds& a, const BoxBounds& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
};

// Euclidean projection onto the probability simplex {x >= 0, sum x = 1}
// by sorting and thresholding.
inline Eigen::VectorXd project_simplex(const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  if (n == 0) throw std::invalid_argument("project_simplex: empty vector");
  std::vector<double> sorted(v.data(), v.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) threshold = candidate;
  }
  Eigen::VectorXd x = (v.array() - threshold).max(0.0);
  // Remove the rounding drift of the threshold from the active coordinates.
  const double total = x.sum();
  if (total > 0.0) x /= total;
  return x;
}

inline Eigen::VectorXd project_box(const Eigen::VectorXd& v, const BoxBounds& bounds) {
  if (v.size() != bounds.size()) throw std::invalid_argument("project_box: size mismatch");
  return v.cwiseMax(bounds.lower).cwiseMin(bounds.upper);
}

inline Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v, double kappa) {
  if (!(kappa >= 0.0)) throw std::invalid_argument("soft_threshold: kappa must be nonnegative");
  return v.unaryExpr([kappa](double z) {
    const double shrunk = std::abs(z) - kappa;
    return shrunk > 0.0 ? std::copysign(shrunk, z) : 0.0;
  });
}

}  // namespace adarestart
