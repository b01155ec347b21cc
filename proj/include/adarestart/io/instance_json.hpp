#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "adarestart/problems/bilinear.hpp"
#include "adarestart/problems/box_lp.hpp"
#include "adarestart/problems/hard_example.hpp"
#include "adarestart/problems/matrix_game.hpp"
#include "adarestart/problems/regression.hpp"

namespace adarestart::io {

using Json = nlohmann::json;

using Instance = std::variant<problems::MatrixGameInstance, problems::BoxLpInstance, problems::BilinearInstance,
                              problems::RegressionInstance, problems::HardExampleInstance>;

inline std::string instance_kind(const Instance& inst) {
  switch (inst.index()) {
    case 0: return "matrix_game";
    case 1: return "box_lp";
    case 2: return "bilinear";
    case 3: return "regression";
    default: return "hard_example";
  }
}

namespace detail {

// JSON has no infinities; they are written as the strings "inf" / "-inf".
inline Json real_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
  if (std::isnan(v)) throw std::invalid_argument("instance json: NaN is not serializable");
  return Json(v);
}

inline double real_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw std::invalid_argument("instance json: bad real '" + s + "'");
  }
  return j.get<double>();
}

inline Json vector_to_json(const Eigen::VectorXd& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(real_to_json(v[i]));
  return arr;
}

inline Eigen::VectorXd vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("instance json: expected array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = real_from_json(j[i]);
  return v;
}

inline Json dense_to_json(const DenseMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) rows.push_back(vector_to_json(a.row(i).transpose()));
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", rows}};
}

inline DenseMatrix dense_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const Json& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows) throw std::invalid_argument("instance json: row count");
  DenseMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::VectorXd r = vector_from_json(data[static_cast<std::size_t>(i)]);
    if (r.size() != cols) throw std::invalid_argument("instance json: column count");
    a.row(i) = r.transpose();
  }
  return a;
}

inline Json sparse_to_json(const SparseMatrix& a) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < a.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(a, r); it; ++it) entries.push_back({it.row(), it.col(), it.value()});
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

inline SparseMatrix sparse_from_json(const Json& j) {
  std::vector<Triplet> triplets;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("instance json: entry must be [row, col, value]");
    triplets.emplace_back(e[0].get<Eigen::Index>(), e[1].get<Eigen::Index>(), e[2].get<double>());
  }
  return make_sparse(j.at("rows").get<Eigen::Index>(), j.at("cols").get<Eigen::Index>(), triplets);
}

inline std::uint64_t seed_of(const Json& j) { return j.value("seed", std::uint64_t{0}); }

}  // namespace detail

inline Json to_json(const Instance& instance) {
  using namespace problems;
  Json j;
  j["kind"] = instance_kind(instance);
  std::visit(
      [&j](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, MatrixGameInstance>) {
          j["seed"] = inst.seed;
          j["m"] = inst.dual_dim();
          j["n"] = inst.primal_dim();
          j["family"] = std::string(to_string(inst.family));
          j["A"] = detail::dense_to_json(inst.A);
        } else if constexpr (std::is_same_v<T, BoxLpInstance>) {
          j["seed"] = inst.seed;
          j["c"] = detail::vector_to_json(inst.c);
          j["A"] = detail::sparse_to_json(inst.A);
          j["b"] = detail::vector_to_json(inst.b);
          j["lower"] = detail::vector_to_json(inst.bounds.lower);
          j["upper"] = detail::vector_to_json(inst.bounds.upper);
          if (inst.planted) {
            j["planted"] = {{"x", detail::vector_to_json(inst.planted->x)},
                            {"y", detail::vector_to_json(inst.planted->y)},
                            {"optimal", inst.planted_is_optimal}};
          }
        } else if constexpr (std::is_same_v<T, BilinearInstance>) {
          j["seed"] = inst.seed;
          j["A"] = detail::dense_to_json(inst.A);
          j["c"] = detail::vector_to_json(inst.c);
          j["b"] = detail::vector_to_json(inst.b);
        } else if constexpr (std::is_same_v<T, RegressionInstance>) {
          j["seed"] = inst.seed;
          j["loss"] = std::string(to_string(inst.loss));
          j["lambda"] = inst.lambda;
          j["data"] = detail::sparse_to_json(inst.data);
          j["labels"] = detail::vector_to_json(inst.labels);
          if (inst.reference_objective) j["reference_objective"] = *inst.reference_objective;
        } else {
          j["n"] = inst.n;
          j["delta"] = inst.delta;
          j["alpha"] = inst.alpha;
        }
      },
      instance);
  return j;
}

// Documents without a payload are generated from their dimension fields and seed:
//   matrix_game: m, n, family
//   box_lp:      grid_rows, grid_cols, plant_optimal
//   bilinear:    m, n, rank, sigma_min, sigma_max
//   regression:  rows, features, density, loss, lambda
inline Instance from_json(const Json& j) {
  using namespace problems;
  const std::string kind = j.at("kind").get<std::string>();
  const std::uint64_t seed = detail::seed_of(j);
  if (kind == "matrix_game") {
    const GameFamily family = parse_game_family(j.value("family", std::string("normal")));
    if (!j.contains("A")) {
      return generate_matrix_game(j.at("m").get<Eigen::Index>(), j.at("n").get<Eigen::Index>(), family, seed);
    }
    MatrixGameInstance inst;
    inst.A = detail::dense_from_json(j.at("A"));
    inst.family = family;
    inst.seed = seed;
    return inst;
  }
  if (kind == "box_lp") {
    if (!j.contains("A")) {
      return generate_transport_lp(j.at("grid_rows").get<Eigen::Index>(), j.at("grid_cols").get<Eigen::Index>(), seed,
                                   j.value("plant_optimal", false));
    }
    BoxLpInstance lp;
    lp.seed = seed;
    lp.c = detail::vector_from_json(j.at("c"));
    lp.A = detail::sparse_from_json(j.at("A"));
    lp.b = detail::vector_from_json(j.at("b"));
    lp.bounds = BoxBounds(detail::vector_from_json(j.at("lower")), detail::vector_from_json(j.at("upper")));
    if (j.contains("planted")) {
      const Json& p = j.at("planted");
      lp.planted = PrimalDualPoint(detail::vector_from_json(p.at("x")), detail::vector_from_json(p.at("y")));
      lp.planted_is_optimal = p.value("optimal", false);
    }
    validate(lp);
    return lp;
  }
  if (kind == "bilinear") {
    if (!j.contains("A")) {
      return generate_bilinear(j.at("m").get<Eigen::Index>(), j.at("n").get<Eigen::Index>(),
                               j.at("rank").get<Eigen::Index>(), j.at("sigma_min").get<double>(),
                               j.at("sigma_max").get<double>(), seed);
    }
    return make_bilinear(detail::dense_from_json(j.at("A")), detail::vector_from_json(j.at("c")),
                         detail::vector_from_json(j.at("b")), seed);
  }
  if (kind == "regression") {
    const Loss loss = parse_loss(j.value("loss", std::string("lasso")));
    const double lambda = j.at("lambda").get<double>();
    if (!j.contains("data")) {
      return generate_regression(j.at("rows").get<Eigen::Index>(), j.at("features").get<Eigen::Index>(),
                                 j.at("density").get<double>(), loss, lambda, seed);
    }
    RegressionInstance inst;
    inst.seed = seed;
    inst.loss = loss;
    inst.lambda = lambda;
    inst.data = detail::sparse_from_json(j.at("data"));
    inst.labels = detail::vector_from_json(j.at("labels"));
    if (j.contains("reference_objective")) inst.reference_objective = j.at("reference_objective").get<double>();
    if (inst.labels.size() != inst.data.rows()) throw std::invalid_argument("instance json: label count");
    return inst;
  }
  if (kind == "hard_example") {
    HardExampleInstance inst;
    inst.n = j.value("n", inst.n);
    inst.delta = j.value("delta", inst.delta);
    inst.alpha = j.value("alpha", inst.alpha);
    return inst;
  }
  throw std::invalid_argument("instance json: unknown kind '" + kind + "'");
}

inline std::string serialize_instance(const Instance& inst) { return to_json(inst).dump(1); }
inline Instance parse_instance(const std::string& text) { return from_json(Json::parse(text)); }

}  // namespace adarestart::io
