#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adarestart/core/run.hpp"
#include "adarestart/harness/active_set.hpp"
#include "adarestart/harness/config.hpp"
#include "adarestart/io/trace_csv.hpp"
#include "adarestart/numerics/spectral.hpp"
#include "adarestart/problems/bilinear.hpp"
#include "adarestart/problems/box_lp.hpp"
#include "adarestart/problems/hard_example.hpp"
#include "adarestart/problems/matrix_game.hpp"
#include "adarestart/problems/regression.hpp"
#include "adarestart/saddle/extragradient.hpp"
#include "adarestart/saddle/pdhg.hpp"
#include "adarestart/smooth/fista.hpp"

namespace adarestart::harness {

using Json = nlohmann::json;

struct ExperimentOutcome {
  RunResult result;
  std::string problem_kind;
  std::string residual_kind;
  double operator_norm = 0.0;  // ||K|| for saddle problems, L for AGD
  std::vector<ActiveSetSnapshot> active_sets;
};

namespace detail {

template <class Residual>
RunResult run_saddle(const ExperimentConfig& cfg, const LinearSaddleProblem& prob, const PrimalDualPoint& omega0,
                     Residual residual, ActiveSetRecorder& recorder, double& norm_out) {
  const double L = op_norm(prob.op()).value;
  norm_out = L;
  const RestartPolicy policy = build_policy(cfg);
  const StoppingRule stop{cfg.budget, cfg.target};
  RunOptions options;
  options.track_current_residual = cfg.track_current;
  recorder.start(omega0.x);
  if (cfg.algorithm == Algorithm::Pdhg) {
    const PdhgStepSizes steps = cfg.gamma ? PdhgStepSizes::equal(*cfg.gamma) : PdhgStepSizes::from_ratio(cfg.ratio, L);
    Pdhg<LinearSaddleProblem> alg(prob, steps, L);
    return run_restarted(alg, omega0, policy, stop, residual, options, recorder);
  }
  if (cfg.algorithm == Algorithm::Extragradient) {
    const double gamma = cfg.gamma.value_or(std::sqrt(0.9) / L);
    Extragradient<LinearSaddleProblem> alg(
        prob, gamma, cfg.average_lookahead ? ExtragradientAverage::Lookahead : ExtragradientAverage::Iterates);
    return run_restarted(alg, omega0, policy, stop, residual, options, recorder);
  }
  throw std::invalid_argument("AGD does not apply to saddle-point problems");
}

template <class Objective>
RunResult run_smooth(const ExperimentConfig& cfg, const Objective& obj, const Eigen::VectorXd& x0, double f_ref) {
  if (cfg.algorithm != Algorithm::Agd) throw std::invalid_argument("smooth problems require algorithm agd");
  FistaSettings settings;
  settings.initial_ell = cfg.ell0;
  settings.eta = cfg.eta;
  settings.reset_ell_on_restart = cfg.reset_ell;
  Fista<Objective> alg(obj, settings);
  auto residual = [&](const PrimalDualPoint& w) { return objective_value(obj, w.x) - f_ref; };
  return run_restarted(alg, PrimalDualPoint::primal_only(x0), build_policy(cfg), StoppingRule{cfg.budget, cfg.target},
                       residual);
}

}  // namespace detail

inline ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const io::Instance instance = load_instance(cfg);
  ExperimentOutcome out;
  out.problem_kind = io::instance_kind(instance);
  ActiveSetRecorder recorder(nullptr);

  if (const auto* game = std::get_if<problems::MatrixGameInstance>(&instance)) {
    const auto prob = problems::to_saddle(*game);
    out.residual_kind = "duality_gap";
    auto residual = [&](const PrimalDualPoint& w) { return problems::matrix_game_residual(*game, w, 1e-6); };
    out.result = detail::run_saddle(cfg, prob, problems::uniform_strategies(*game), residual, recorder,
                                    out.operator_norm);
  } else if (const auto* lp = std::get_if<problems::BoxLpInstance>(&instance)) {
    const auto prob = problems::to_saddle(*lp);
    out.residual_kind = "lp_combined";
    auto residual = [&](const PrimalDualPoint& w) { return problems::lp_residual(*lp, w).combined; };
    ActiveSetRecorder lp_recorder(cfg.active_set ? &lp->bounds : nullptr);
    const PrimalDualPoint omega0(project_box(Eigen::VectorXd::Zero(lp->primal_dim()), lp->bounds),
                                 Eigen::VectorXd::Zero(lp->dual_dim()));
    out.result = detail::run_saddle(cfg, prob, omega0, residual, lp_recorder, out.operator_norm);
    out.active_sets = lp_recorder.snapshots();
  } else if (const auto* bil = std::get_if<problems::BilinearInstance>(&instance)) {
    const auto prob = problems::to_saddle(*bil);
    out.residual_kind = "distance_to_solution_set";
    auto residual = [&](const PrimalDualPoint& w) { return problems::distance_to_solution_set(*bil, w); };
    out.result = detail::run_saddle(cfg, prob, PrimalDualPoint::zeros(bil->primal_dim(), bil->dual_dim()), residual,
                                    recorder, out.operator_norm);
  } else if (const auto* reg = std::get_if<problems::RegressionInstance>(&instance)) {
    const problems::RegressionObjective obj(*reg);
    out.operator_norm = obj.smoothness();
    out.residual_kind = reg->reference_objective ? "objective_gap" : "objective";
    out.result = detail::run_smooth(cfg, obj, Eigen::VectorXd::Zero(obj.dimension()),
                                    reg->reference_objective.value_or(0.0));
  } else {
    const auto& hard = std::get<problems::HardExampleInstance>(instance);
    const problems::HardExampleObjective obj(hard);
    out.operator_norm = obj.smoothness();
    out.residual_kind = "objective_gap";
    out.result = detail::run_smooth(cfg, obj, hard.start(), obj.optimal_value());
  }
  return out;
}

inline Json summarize(const ExperimentConfig& cfg, const ExperimentOutcome& out) {
  const RunResult& r = out.result;
  Json j;
  j["problem"] = out.problem_kind;
  j["algorithm"] = std::string(to_string(cfg.algorithm));
  j["policy"] = policy_name(build_policy(cfg));
  j["residual_kind"] = out.residual_kind;
  j["iterations"] = r.iterations;
  j["final_residual"] = r.trace.empty() ? Json(nullptr) : Json(r.trace.rows.back().residual);
  j["best_residual"] = r.best_residual;
  j["target"] = cfg.target ? Json(*cfg.target) : Json(nullptr);
  j["reached_target"] = r.reached_target();
  j["iterations_to_target"] = r.iterations_to_target ? Json(*r.iterations_to_target) : Json(nullptr);
  j["restart_count"] = r.trace.restart_count();
  j["epoch_lengths"] = r.trace.epoch_lengths();
  j["operator_norm"] = out.operator_norm;
  if (!out.active_sets.empty()) {
    j["active_set_snapshots"] = out.active_sets.size();
    j["last_active_set_change_iteration"] = out.active_sets[last_active_set_change(out.active_sets)].iteration;
  }
  return j;
}

// Exit status: 0 completed (and met the target, if any), 2 target unmet, 1 error.
inline int cmd_run(const ExperimentConfig& cfg, std::ostream& log = std::cerr) {
  try {
    const ExperimentOutcome out = run_experiment(cfg);
    const Json summary = summarize(cfg, out);
    if (cfg.trace_path) {
      std::ofstream f(*cfg.trace_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + *cfg.trace_path);
      io::write_trace(out.result.trace, f);
      if (cfg.track_current) {
        std::ofstream g(*cfg.trace_path + ".current.csv", std::ios::binary);
        io::write_current_residuals(out.result.trace, g);
      }
    }
    if (cfg.summary_path) {
      std::ofstream f(*cfg.summary_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + *cfg.summary_path);
      f << summary.dump(2) << '\n';
    } else {
      std::cout << summary.dump(2) << '\n';
    }
    return cfg.target && !out.result.reached_target() ? 2 : 0;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace adarestart::harness
