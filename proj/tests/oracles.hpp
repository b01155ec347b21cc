#pragma once

// Reference computations used only by the tests. Each one is written
// independently of the library routine it checks: brute force, literal
// transcriptions of the update rules, or plain numerical differentiation.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Euclidean projection onto the probability simplex by enumerating every
// support set S: on S the KKT system gives x_S = v_S - (sum v_S - 1)/|S|.
inline Vec simplex_projection_brute_force(const Vec& v) {
  const int n = static_cast<int>(v.size());
  Vec best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sum += v[i];
        ++count;
      }
    }
    const double shift = (sum - 1.0) / count;
    Vec x = Vec::Zero(n);
    bool feasible = true;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        x[i] = v[i] - shift;
        if (x[i] < -1e-14) feasible = false;
      }
    }
    if (!feasible) continue;
    const double d = (x - v).norm();
    if (d < best_dist) {
      best_dist = d;
      best = x.cwiseMax(0.0);
    }
  }
  return best;
}

// One PDHG iteration on min_x max_y y^T A x over simplices, written out
// directly from the update rules.
struct GamePdhg {
  Vec ux, uy, xhat;
};

inline GamePdhg game_pdhg_step(const Mat& A, const GamePdhg& s, double gx, double gy) {
  GamePdhg out;
  out.uy = simplex_projection_brute_force(s.uy + gy * (A * s.xhat));
  out.ux = simplex_projection_brute_force(s.ux - gx * (A.transpose() * out.uy));
  out.xhat = 2.0 * out.ux - s.ux;
  return out;
}

// One extragradient iteration on the unconstrained bilinear game
// f = c^T x + y^T A x + b^T y. The penalized subproblem
// argmin_w g^T w + ||w - u||^2 / gamma has the closed form u - (gamma/2) g.
inline std::pair<Vec, Vec> bilinear_extragradient_step(const Mat& A, const Vec& c, const Vec& b, const Vec& ux,
                                                       const Vec& uy, double gamma) {
  const double h = gamma / 2.0;
  const Vec gx0 = c + A.transpose() * uy;
  const Vec gy0 = -(A * ux + b);
  const Vec vx = ux - h * gx0;
  const Vec vy = uy - h * gy0;
  const Vec gx1 = c + A.transpose() * vy;
  const Vec gy1 = -(A * vx + b);
  return {ux - h * gx1, uy - h * gy1};
}

// One FISTA step with backtracking for 0.5 ||D x - y||^2 + lambda ||x||_1.
struct LassoFista {
  Vec w, v;
  double lambda_m = 1.0;
  double ell = 1.0;
};

inline LassoFista lasso_fista_step(const Mat& D, const Vec& y, double reg, double eta, const LassoFista& s) {
  auto a = [&](const Vec& x) { return 0.5 * (D * x - y).squaredNorm(); };
  const Vec grad = D.transpose() * (D * s.v - y);
  double ell = s.ell;
  Vec p;
  for (int k = 0; k < 500; ++k) {
    const Vec z = s.v - grad / ell;
    p = z;
    const double kappa = reg / ell;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      p[i] = z[i] > kappa ? z[i] - kappa : (z[i] < -kappa ? z[i] + kappa : 0.0);
    }
    const Vec d = p - s.v;
    if (a(p) <= a(s.v) + d.dot(grad) + 0.5 * ell * d.squaredNorm() + 1e-12 * (1.0 + std::abs(a(s.v)))) break;
    ell *= eta;
  }
  LassoFista out;
  out.lambda_m = (1.0 + std::sqrt(1.0 + 4.0 * s.lambda_m * s.lambda_m)) / 2.0;
  out.w = p;
  out.v = p + ((s.lambda_m - 1.0) / out.lambda_m) * (p - s.w);
  out.ell = ell;
  return out;
}

inline Vec central_difference(const std::function<double(const Vec&)>& f, const Vec& x, double h = 1e-6) {
  Vec g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vec p = x, m = x;
    p[i] += h;
    m[i] -= h;
    g[i] = (f(p) - f(m)) / (2.0 * h);
  }
  return g;
}

// Lower estimate of sup over the radius-r ball around w of f(w_x, y) - f(x, w_y)
// for f = c^T x + y^T A x + b^T y, by sampling the ball's surface.
inline double sampled_localized_gap(const Mat& A, const Vec& c, const Vec& b, const Vec& wx, const Vec& wy, double r,
                                    int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto f = [&](const Vec& x, const Vec& y) { return c.dot(x) + y.dot(A * x) + b.dot(y); };
  double best = -std::numeric_limits<double>::infinity();
  const Eigen::Index n = wx.size(), m = wy.size();
  for (int s = 0; s < samples; ++s) {
    Vec dir(n + m);
    for (Eigen::Index i = 0; i < n + m; ++i) dir[i] = normal(rng);
    dir *= r / dir.norm();
    const Vec x = wx + dir.head(n);
    const Vec y = wy + dir.tail(m);
    best = std::max(best, f(wx, y) - f(x, wy));
  }
  return best;
}

// Distance from w to {x : A x = -b} x {y : A^T y = -c} by gradient descent
// on the least-squares residuals started at w; the iterates never leave
// w + range(A^T) (resp. range(A)), so the limit is the projection.
inline double distance_to_solutions_by_descent(const Mat& A, const Vec& c, const Vec& b, const Vec& wx,
                                               const Vec& wy, int iterations) {
  const double step = 1.0 / A.squaredNorm();  // Frobenius^2 bounds sigma_max^2
  Vec x = wx, y = wy;
  for (int k = 0; k < iterations; ++k) {
    x -= step * (A.transpose() * (A * x + b));
    y -= step * (A * (A.transpose() * y + c));
  }
  return std::sqrt((x - wx).squaredNorm() + (y - wy).squaredNorm());
}

// sup_y f(x, y) - inf_x f(x, y) for f = y^T A x over simplices, taken over
// the vertices of each simplex.
inline double game_gap_by_vertices(const Mat& A, const Vec& x, const Vec& y) {
  double sup = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    Vec e = Vec::Zero(A.rows());
    e[i] = 1.0;
    sup = std::max(sup, e.dot(A * x));
  }
  double inf = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    Vec e = Vec::Zero(A.cols());
    e[j] = 1.0;
    inf = std::min(inf, y.dot(A * e));
  }
  return sup - inf;
}

}  // namespace oracle
