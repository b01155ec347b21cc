#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adarestart/core/contraction.hpp"
#include "adarestart/core/run.hpp"
#include "adarestart/harness/search.hpp"
#include "adarestart/numerics/spectral.hpp"
#include "adarestart/problems/bilinear.hpp"
#include "adarestart/problems/box_lp.hpp"
#include "adarestart/problems/hard_example.hpp"
#include "adarestart/problems/lower_bound.hpp"
#include "adarestart/problems/matrix_game.hpp"
#include "adarestart/problems/quadratic.hpp"
#include "adarestart/saddle/contracts.hpp"
#include "adarestart/saddle/extragradient.hpp"
#include "adarestart/saddle/pdhg.hpp"
#include "adarestart/smooth/checks.hpp"
#include "adarestart/smooth/fista.hpp"
#include "adarestart/theory/bounds.hpp"

namespace adarestart::harness {

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

namespace acceptance_detail {

inline std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

template <class Body>
CriterionOutcome timed(int id, std::string title, double limit, Body body) {
  CriterionOutcome out;
  out.id = id;
  out.title = std::move(title);
  out.time_limit = limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    out.passed = body(out.detail);
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.seconds >= limit) {
    out.passed = false;
    out.detail += " (over time limit)";
  }
  return out;
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Instance shared by criteria 3, 4 and 9.
inline problems::BilinearInstance criterion3_instance() {
  return problems::generate_bilinear(20, 20, 20, 0.1, 1.0, 20230);
}

struct Criterion3Run {
  problems::BilinearInstance inst;
  RunResult result;
  double budget = 0.0;
  double t_star = 0.0;
  std::optional<std::int64_t> restart_reaching_eps;
  double best_restart_ratio = std::numeric_limits<double>::infinity();
};

inline Criterion3Run run_criterion3() {
  Criterion3Run run;
  run.inst = criterion3_instance();
  const auto prob = problems::to_saddle(run.inst);
  const double L = run.inst.sigma_max;
  const double eps = 1e-6;
  theory::TheoryConstants c;
  c.L = L;
  c.theta = run.inst.sigma_min;
  c.gamma = 0.7 / L;
  c.beta = 0.5;
  run.budget = theory::iteration_budget_pdhg(c, eps, 1.0);
  run.t_star = theory::t_star_pdhg(c);

  Pdhg<LinearSaddleProblem> alg(prob, PdhgStepSizes::equal(c.gamma), L);
  const PrimalDualPoint omega0 = PrimalDualPoint::zeros(run.inst.primal_dim(), run.inst.dual_dim());
  const double d0 = problems::distance_to_solution_set(run.inst, omega0);
  auto residual = [&](const PrimalDualPoint& w) { return problems::distance_to_solution_set(run.inst, w) / d0; };
  auto observer = [&](const TraceRow& row, const auto&, const RestartController& ctl) {
    if (!row.restarted) return;
    const double ratio = residual(ctl.omega_prev());
    run.best_restart_ratio = std::min(run.best_restart_ratio, ratio);
    if (ratio <= eps && !run.restart_reaching_eps) run.restart_reaching_eps = row.total_iter;
  };
  AdaptiveRestart policy;
  policy.beta = c.beta;
  // Stop well below eps, short of roundoff level, so the trace covers the
  // whole approach to eps.
  const StoppingRule stop{static_cast<std::int64_t>(std::floor(run.budget)), eps * 1e-2};
  run.result = run_restarted(alg, omega0, policy, stop, residual, {}, observer);
  return run;
}

}  // namespace acceptance_detail

inline CriterionOutcome criterion1_localized_gap_scaling() {
  return acceptance_detail::timed(1, "localized gap scales linearly in the radius", 10.0, [](std::string& detail) {
    double worst = 0.0;
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      problems::Rng rng(1000 + seed);
      std::uniform_int_distribution<int> dim(2, 10);
      const Eigen::Index m = dim(rng), n = dim(rng);
      const Eigen::Index rank = std::uniform_int_distribution<Eigen::Index>(1, std::min(m, n))(rng);
      const auto inst = problems::generate_bilinear(m, n, rank, 0.1, 2.0, 5000 + seed);
      std::uniform_real_distribution<double> radius(1e-3, 10.0);
      for (int k = 0; k < 20; ++k) {
        const PrimalDualPoint w(problems::gaussian_vector(n, rng), problems::gaussian_vector(m, rng));
        const double ra = radius(rng), rb = radius(rng);
        const double da = problems::bilinear_localized_gap(inst, w, ra);
        const double db = problems::bilinear_localized_gap(inst, w, rb);
        const double scaled = rb / ra * da;
        const double rel = std::abs(db - scaled) / std::max(std::abs(db), std::numeric_limits<double>::min());
        worst = std::max(worst, rel);
        if (rel > 1e-9 || db > std::max(1.0, rb / ra) * da * (1.0 + 1e-12)) ok = false;
      }
    }
    detail = "1000 points, worst relative deviation " + acceptance_detail::fmt(worst);
    return ok;
  });
}

inline CriterionOutcome criterion2_error_bound() {
  return acceptance_detail::timed(2, "error bound with theta = sigma_min", 30.0, [](std::string& detail) {
    double worst = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      problems::Rng rng(2000 + seed);
      const Eigen::Index m = std::uniform_int_distribution<Eigen::Index>(10, 30)(rng);
      const Eigen::Index n = std::uniform_int_distribution<Eigen::Index>(5, 20)(rng);
      const Eigen::Index rank = std::uniform_int_distribution<Eigen::Index>(1, std::min(m, n) - 1)(rng);
      const auto inst = problems::generate_bilinear(m, n, rank, 0.05, 3.0, 6000 + seed);
      const double sigma = min_nonzero_singular_value(inst.A);
      for (int k = 0; k < 100; ++k) {
        const PrimalDualPoint w(3.0 * problems::gaussian_vector(n, rng), 3.0 * problems::gaussian_vector(m, rng));
        const double r = problems::distance_to_solution_set(inst, w);
        const double gap = problems::bilinear_localized_gap(inst, w, r);
        const double lhs = sigma * r * r;
        const double margin = gap + 1e-9 * std::max(1.0, gap) - lhs;
        worst = std::min(worst, margin / std::max(1.0, gap));
        if (margin < 0.0) ok = false;
      }
    }
    detail = "2000 points, worst normalized margin " + acceptance_detail::fmt(worst);
    return ok;
  });
}

inline CriterionOutcome criterion3_pdhg_budget() {
  return acceptance_detail::timed(3, "restarted PDHG reaches 1e-6 within the iteration budget", 60.0,
                                  [](std::string& detail) {
                                    const auto run = acceptance_detail::run_criterion3();
                                    detail = "budget " + acceptance_detail::fmt(run.budget) + ", restart point at " +
                                             (run.restart_reaching_eps
                                                  ? std::to_string(*run.restart_reaching_eps)
                                                  : std::string("none")) +
                                             ", best restart ratio " +
                                             acceptance_detail::fmt(run.best_restart_ratio);
                                    return run.restart_reaching_eps.has_value() &&
                                           static_cast<double>(*run.restart_reaching_eps) <= run.budget;
                                  });
}

inline CriterionOutcome criterion4_epoch_bounds() {
  return acceptance_detail::timed(4, "epoch lengths respect t*", 60.0, [](std::string& detail) {
    const auto run = acceptance_detail::run_criterion3();
    const CheckReport report = theory::verify_epoch_bounds(run.result.trace, run.t_star, 1);
    const auto lengths = run.result.trace.epoch_lengths();
    const auto longest = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
    detail = "t* = " + acceptance_detail::fmt(run.t_star) + ", " + std::to_string(lengths.size()) +
             " epochs, longest " + std::to_string(longest) + ", worst margin " +
             acceptance_detail::fmt(report.worst_margin);
    return report.passed && report.checked > 0;
  });
}

inline CriterionOutcome criterion5_matrix_game_speedup() {
  return acceptance_detail::timed(5, "matrix games: adaptive vs best fixed period vs no restarts", 600.0,
                                  [](std::string& detail) {
    const std::vector<std::int64_t> periods{8, 32, 128, 512, 2048};
    const double target = 1e-6;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<problems::MatrixGameInstance> games;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      games.push_back(problems::generate_matrix_game(100, 100, problems::GameFamily::UniformNegative, 300 + seed));
    }
    auto iterations = [&](const problems::MatrixGameInstance& g, PolicyKind kind, std::int64_t period,
                          std::int64_t budget) {
      ExperimentConfig cfg;
      cfg.instance = g;
      cfg.algorithm = Algorithm::Pdhg;
      cfg.policy = kind;
      cfg.period = period;
      cfg.beta = 0.5;
      cfg.budget = budget;
      cfg.target = target;
      cfg.track_current = kind == PolicyKind::None;
      const auto out = run_experiment(cfg);
      const auto hit = out.result.trace.first_below(target, kind == PolicyKind::None);
      std::optional<std::int64_t> best = out.result.iterations_to_target;
      if (hit && (!best || *hit < *best)) best = hit;
      return best ? static_cast<double>(*best) : inf;
    };
    std::vector<double> adaptive;
    for (const auto& g : games) adaptive.push_back(iterations(g, PolicyKind::Adaptive, 0, 400000));
    const double adaptive_median = acceptance_detail::median(adaptive);
    if (!std::isfinite(adaptive_median)) {
      detail = "adaptive median did not reach the target";
      return false;
    }
    // A fixed-period run still above the target after adaptive_median / 1.5
    // iterations cannot make the 1.5x bound fail, so that is its budget.
    const auto fixed_cap = static_cast<std::int64_t>(std::floor(adaptive_median / 1.5));
    double best_fixed = inf;
    std::int64_t best_period = 0;
    for (const std::int64_t period : periods) {
      std::vector<double> runs;
      for (const auto& g : games) runs.push_back(iterations(g, PolicyKind::Fixed, period, fixed_cap));
      const double med = acceptance_detail::median(runs);
      if (med < best_fixed) {
        best_fixed = med;
        best_period = period;
      }
    }
    const auto none_budget = static_cast<std::int64_t>(std::ceil(5.0 * adaptive_median));
    std::vector<double> none;
    for (const auto& g : games) none.push_back(iterations(g, PolicyKind::None, 0, none_budget));
    const bool none_failed = std::all_of(none.begin(), none.end(), [](double v) { return !std::isfinite(v); });
    detail = "adaptive median " + acceptance_detail::fmt(adaptive_median) +
             (std::isfinite(best_fixed) ? ", best fixed T=" + std::to_string(best_period) + " median " +
                                              acceptance_detail::fmt(best_fixed)
                                        : ", no fixed period has median below " + std::to_string(fixed_cap)) +
             ", no-restart reached within " + std::to_string(none_budget) + ": " +
             std::to_string(std::count_if(none.begin(), none.end(), [](double v) { return std::isfinite(v); })) +
             "/10";
    return adaptive_median <= 1.5 * best_fixed && none_failed;
  });
}

inline CriterionOutcome criterion6_fista_sublinear() {
  return acceptance_detail::timed(6, "FISTA sublinear bound for t = 1..1000", 10.0, [](std::string& detail) {
    const auto quad = problems::make_quadratic(50, 0.01, 100.0, 606);
    FistaSettings settings;
    settings.initial_ell = 1.0;
    settings.eta = 1.25;
    Fista<problems::QuadraticObjective> alg(quad, settings);
    SublinearMonitor monitor(quad.minimizer(), quad.optimal_value(), settings.eta, quad.smoothness());
    const PrimalDualPoint omega = PrimalDualPoint::primal_only(Eigen::VectorXd::Zero(50));
    auto residual = [&](const PrimalDualPoint& w) { return quad.smooth_value(w.x); };
    run_restarted(alg, omega, NoRestart{}, StoppingRule{1000, std::nullopt}, residual, {}, monitor);
    detail = std::to_string(monitor.report().checked) + " iterations, worst margin " +
             acceptance_detail::fmt(monitor.report().worst_margin);
    return monitor.report().passed && monitor.report().checked == 1000;
  });
}

inline CriterionOutcome criterion7_agd_near_optimal() {
  return acceptance_detail::timed(7, "adaptive AGD within 2x of the optimal fixed period", 60.0,
                                  [](std::string& detail) {
    // kappa_bar = L eta / alpha = 1e4 with eta = 5/4.
    const double L = 1.0, eta = 1.25, alpha = L * eta / 1e4;
    const auto quad = problems::make_quadratic(100, alpha, L, 707);
    const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(100);
    const double d0 = (x0 - quad.minimizer()).norm();
    auto residual = [&](const PrimalDualPoint& w) { return (w.x - quad.minimizer()).norm() / d0; };
    auto count = [&](const RestartPolicy& policy) -> std::optional<std::int64_t> {
      FistaSettings settings;
      settings.eta = eta;
      Fista<problems::QuadraticObjective> alg(quad, settings);
      return run_restarted(alg, PrimalDualPoint::primal_only(x0), policy, StoppingRule{200000, 1e-6}, residual)
          .iterations_to_target;
    };
    AdaptiveRestart adaptive;
    adaptive.beta = 0.25;
    adaptive.phi = PhiFunction::shifted_square();
    const auto period = static_cast<std::int64_t>(std::ceil(theory::optimal_fixed_period(1e4)));
    const auto a = count(adaptive);
    const auto f = count(FixedPeriod{period});
    detail = "adaptive " + (a ? std::to_string(*a) : std::string("unreached")) + ", fixed(" +
             std::to_string(period) + ") " + (f ? std::to_string(*f) : std::string("unreached"));
    return a && f && static_cast<double>(*a) <= 2.0 * static_cast<double>(*f);
  });
}

inline CriterionOutcome criterion8_hard_example() {
  return acceptance_detail::timed(8, "hard example: adaptive beats the function scheme", 300.0,
                                  [](std::string& detail) {
    const problems::HardExampleInstance inst;
    const problems::HardExampleObjective obj(inst);
    auto residual = [&](const PrimalDualPoint& w) { return obj.smooth_value(w.x) - obj.optimal_value(); };
    struct Outcome {
      std::optional<std::int64_t> steps;
      double mean_interval = 0.0;
    };
    auto run = [&](const RestartPolicy& policy) {
      Fista<problems::HardExampleObjective> alg(obj, FistaSettings{});
      const auto r = run_restarted(alg, PrimalDualPoint::primal_only(inst.start()), policy,
                                   StoppingRule{2000000, 1e-8}, residual);
      Outcome o;
      o.steps = r.iterations_to_target;
      const auto lengths = r.trace.epoch_lengths();
      double sum = 0.0;
      for (auto l : lengths) sum += static_cast<double>(l);
      o.mean_interval = lengths.empty() ? std::numeric_limits<double>::infinity()
                                        : sum / static_cast<double>(lengths.size());
      return o;
    };
    AdaptiveRestart adaptive;
    adaptive.beta = 0.25;
    adaptive.phi = PhiFunction::shifted_square();
    const Outcome a = run(adaptive);
    const Outcome f = run(FunctionScheme{});
    detail = "adaptive " + (a.steps ? std::to_string(*a.steps) : std::string("unreached")) + " steps (mean epoch " +
             acceptance_detail::fmt(a.mean_interval) + "), function scheme " +
             (f.steps ? std::to_string(*f.steps) : std::string("unreached")) + " steps (mean epoch " +
             acceptance_detail::fmt(f.mean_interval) + ")";
    const bool faster = a.steps && (!f.steps || *a.steps < *f.steps);
    return faster && f.mean_interval < a.mean_interval;
  });
}

inline CriterionOutcome criterion9_extragradient_contracts() {
  return acceptance_detail::timed(9, "extragradient distance contracts within epochs", 30.0,
                                  [](std::string& detail) {
    const auto inst = acceptance_detail::criterion3_instance();
    const auto prob = problems::to_saddle(inst);
    Extragradient<LinearSaddleProblem> alg(prob, 0.7 / inst.sigma_max);
    ContractionMonitor monitor([&](const PrimalDualPoint& w) { return problems::distance_to_solution_set(inst, w); },
                               kExtragradientContractionFactor, true);
    AdaptiveRestart policy;
    policy.beta = 0.5;
    auto residual = [&](const PrimalDualPoint& w) { return problems::distance_to_solution_set(inst, w); };
    run_restarted(alg, PrimalDualPoint::zeros(inst.primal_dim(), inst.dual_dim()), policy,
                  StoppingRule{2000, std::nullopt}, residual, {}, monitor);
    detail = "averaged worst margin " + acceptance_detail::fmt(monitor.candidate_report().worst_margin) +
             ", current worst margin " + acceptance_detail::fmt(monitor.current_report().worst_margin);
    return monitor.candidate_report().passed && monitor.current_report().passed &&
           monitor.candidate_report().checked == 2000;
  });
}

inline CriterionOutcome criterion10_lower_bound_spectrum() {
  return acceptance_detail::timed(10, "lower-bound instances have singular values in range", 10.0,
                                  [](std::string& detail) {
    bool ok = true;
    double worst = std::numeric_limits<double>::infinity();
    for (const Eigen::Index k : {2, 10, 50}) {
      for (const auto& [lo, hi] : {std::pair{1.0, 2.0}, std::pair{0.1, 10.0}}) {
        const auto inst = problems::lower_bound_instance(k, lo, hi);
        const Eigen::VectorXd s = singular_values(inst.A);
        worst = std::min({worst, s.minCoeff() - lo, hi - s.maxCoeff()});
        if (s.minCoeff() < lo - 1e-8 || s.maxCoeff() > hi + 1e-8) ok = false;
      }
    }
    detail = "worst margin " + acceptance_detail::fmt(worst);
    return ok;
  });
}

inline CriterionOutcome criterion11_op_norm() {
  return acceptance_detail::timed(11, "power iteration matches the SVD", 10.0, [](std::string& detail) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      problems::Rng rng(1100 + seed);
      const DenseMatrix a = problems::gaussian_matrix(50, 40, rng);
      const double exact = singular_values(a)[0];
      const double est = op_norm(sparse_from_dense(a)).value;
      worst = std::max(worst, std::abs(est - exact) / exact);
    }
    detail = "worst relative error " + acceptance_detail::fmt(worst);
    return worst <= 1e-3;
  });
}

inline CriterionOutcome criterion12_lp_pipeline() {
  return acceptance_detail::timed(12, "LP pipeline: ratio sweep then adaptive PDHG", 300.0, [](std::string& detail) {
    const auto lp = problems::generate_transport_lp(10, 20, 1212);
    const auto sweep = lp_ratio_sweep(lp, default_ratio_grid(), 1000);
    const double target = 1e-4;
    ExperimentConfig cfg;
    cfg.instance = lp;
    cfg.algorithm = Algorithm::Pdhg;
    cfg.ratio = sweep.best_ratio;
    cfg.policy = PolicyKind::Adaptive;
    cfg.beta = 0.5;
    cfg.budget = 500000;
    cfg.target = target;
    const auto adaptive = run_experiment(cfg);
    if (!adaptive.result.iterations_to_target) {
      detail = "ratio " + acceptance_detail::fmt(sweep.best_ratio) + ", adaptive did not reach 1e-4; best " +
               acceptance_detail::fmt(adaptive.result.best_residual);
      return false;
    }
    const std::int64_t n = *adaptive.result.iterations_to_target;
    cfg.policy = PolicyKind::None;
    cfg.budget = n;
    cfg.target.reset();
    cfg.track_current = true;
    const auto none = run_experiment(cfg);
    const TraceRow& last = none.result.trace.rows.back();
    const double none_residual = std::min(last.residual, last.current_residual.value_or(last.residual));
    const double adaptive_residual = adaptive.result.trace.rows.back().residual;
    detail = "ratio " + acceptance_detail::fmt(sweep.best_ratio) + ", adaptive " +
             acceptance_detail::fmt(adaptive_residual) + " at " + std::to_string(n) + ", no restart " +
             acceptance_detail::fmt(none_residual);
    return adaptive_residual < target && none_residual > adaptive_residual;
  });
}

inline std::vector<std::function<CriterionOutcome()>> acceptance_criteria() {
  return {criterion1_localized_gap_scaling, criterion2_error_bound,       criterion3_pdhg_budget,
          criterion4_epoch_bounds,          criterion5_matrix_game_speedup, criterion6_fista_sublinear,
          criterion7_agd_near_optimal,      criterion8_hard_example,       criterion9_extragradient_contracts,
          criterion10_lower_bound_spectrum, criterion11_op_norm,           criterion12_lp_pipeline};
}

}  // namespace adarestart::harness
