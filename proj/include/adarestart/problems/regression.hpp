#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adarestart/numerics/prox.hpp"
#include "adarestart/numerics/sparse.hpp"
#include "adarestart/numerics/spectral.hpp"
#include "adarestart/problems/random.hpp"

namespace adarestart::problems {

enum class Loss { Lasso, Logistic };

inline std::string_view to_string(Loss loss) { return loss == Loss::Lasso ? "lasso" : "logistic"; }

inline Loss parse_loss(std::string_view name) {
  if (name == "lasso") return Loss::Lasso;
  if (name == "logistic") return Loss::Logistic;
  throw std::invalid_argument("unknown loss: " + std::string(name));
}

struct PreprocessedDesign {
  SparseMatrix matrix;
  // column_map[k] = original 0-based column of retained column k; the
  // appended intercept is the last column and maps to -1.
  std::vector<Eigen::Index> column_map;
};

// Drops all-zero columns, appends an intercept column of ones, then scales
// every column to unit Euclidean norm.
inline PreprocessedDesign preprocess_design(const SparseMatrix& raw) {
  const Eigen::Index rows = raw.rows();
  if (rows == 0) throw std::invalid_argument("preprocess_design: no data rows");
  Eigen::VectorXd col_sq = Eigen::VectorXd::Zero(raw.cols());
  for (Eigen::Index r = 0; r < raw.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(raw, r); it; ++it) col_sq[it.col()] += it.value() * it.value();
  }
  PreprocessedDesign out;
  std::vector<Eigen::Index> new_index(static_cast<std::size_t>(raw.cols()), -1);
  for (Eigen::Index j = 0; j < raw.cols(); ++j) {
    if (col_sq[j] > 0.0) {
      new_index[static_cast<std::size_t>(j)] = static_cast<Eigen::Index>(out.column_map.size());
      out.column_map.push_back(j);
    }
  }
  const Eigen::Index kept = static_cast<Eigen::Index>(out.column_map.size());
  out.column_map.push_back(-1);

  const double intercept = 1.0 / std::sqrt(static_cast<double>(rows));
  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(raw.nonZeros() + rows));
  for (Eigen::Index r = 0; r < raw.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(raw, r); it; ++it) {
      if (it.value() == 0.0) continue;
      const Eigen::Index k = new_index[static_cast<std::size_t>(it.col())];
      entries.emplace_back(r, k, it.value() / std::sqrt(col_sq[it.col()]));
    }
    entries.emplace_back(r, kept, intercept);
  }
  out.matrix = make_sparse(rows, kept + 1, entries);
  return out;
}

struct RegressionInstance {
  SparseMatrix data;  // rows a_i^T, already preprocessed
  Eigen::VectorXd labels;
  double lambda = 0.0;
  Loss loss = Loss::Lasso;
  std::uint64_t seed = 0;
  // Best objective value known for this instance (from a long reference run).
  std::optional<double> reference_objective;
};

// Synthetic sparse regression data in the shape of the LIBSVM benchmarks:
// Gaussian nonzeros at the given density, labels from a sparse planted model
// (LASSO: noisy linear response; logistic: +/-1 from the sign).
inline RegressionInstance generate_regression(Eigen::Index rows, Eigen::Index features, double density,
                                              Loss loss, double lambda, std::uint64_t seed) {
  if (rows < 1 || features < 1 || !(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("generate_regression: invalid dimensions or density");
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Triplet> entries;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < features; ++j) {
      if (unit(rng) < density) entries.emplace_back(i, j, normal(rng));
    }
  }
  const SparseMatrix raw = make_sparse(rows, features, entries);
  RegressionInstance inst;
  inst.data = preprocess_design(raw).matrix;
  inst.loss = loss;
  inst.lambda = lambda;
  inst.seed = seed;
  Eigen::VectorXd truth = Eigen::VectorXd::Zero(inst.data.cols());
  for (Eigen::Index j = 0; j < truth.size(); ++j) {
    if (unit(rng) < 0.2) truth[j] = normal(rng);
  }
  Eigen::VectorXd response = inst.data * truth;
  inst.labels.resize(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double noisy = response[i] + 0.1 * normal(rng);
    inst.labels[i] = loss == Loss::Lasso ? noisy : (noisy >= 0.0 ? 1.0 : -1.0);
  }
  return inst;
}

inline double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// log(1 + exp(z)) without overflow.
inline double log1p_exp(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

inline double logistic_sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// f(x) = sum_i l_i(a_i^T x) + lambda ||x||_1 with
//   LASSO:    l_i(c) = (c - b_i)^2 / 2
//   logistic: l_i(c) = log(1 + exp(c sign(b_i)))   (sign convention as printed)
class RegressionObjective {
 public:
  explicit RegressionObjective(const RegressionInstance& inst)
      : inst_(&inst), data_t_(inst.data.transpose()) {
    if (inst.labels.size() != inst.data.rows()) throw std::invalid_argument("RegressionObjective: label count");
    if (!(inst.lambda >= 0.0)) throw std::invalid_argument("RegressionObjective: lambda must be >= 0");
    signs_ = inst.labels.unaryExpr([](double b) { return sign_of(b); });
    const double norm = op_norm(inst.data, 1e-10).value;
    smoothness_ = inst.loss == Loss::Lasso ? norm * norm : 0.25 * norm * norm;
  }

  Eigen::Index dimension() const { return inst_->data.cols(); }

  double smooth_value(const Eigen::VectorXd& x) const {
    const Eigen::VectorXd z = inst_->data * x;
    if (inst_->loss == Loss::Lasso) return 0.5 * (z - inst_->labels).squaredNorm();
    double total = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) total += log1p_exp(z[i] * signs_[i]);
    return total;
  }

  Eigen::VectorXd smooth_gradient(const Eigen::VectorXd& x) const {
    const Eigen::VectorXd z = inst_->data * x;
    Eigen::VectorXd dz(z.size());
    if (inst_->loss == Loss::Lasso) {
      dz = z - inst_->labels;
    } else {
      for (Eigen::Index i = 0; i < z.size(); ++i) dz[i] = signs_[i] * logistic_sigmoid(z[i] * signs_[i]);
    }
    return data_t_ * dz;
  }

  double nonsmooth_value(const Eigen::VectorXd& x) const { return inst_->lambda * x.lpNorm<1>(); }
  Eigen::VectorXd prox(const Eigen::VectorXd& z, double step) const { return soft_threshold(z, inst_->lambda * step); }

  double smoothness() const { return smoothness_; }
  const RegressionInstance& instance() const { return *inst_; }

 private:
  const RegressionInstance* inst_;
  SparseMatrix data_t_;
  Eigen::VectorXd signs_;
  double smoothness_ = 0.0;
};

}  // namespace adarestart::problems
