// Command-line front end: run, grid-search, ratio-sweep, verify, gen-instance, active-set.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adarestart/harness/active_set.hpp"
#include "adarestart/harness/config.hpp"
#include "adarestart/harness/experiment.hpp"
#include "adarestart/harness/search.hpp"
#include "adarestart/harness/verify.hpp"
#include "adarestart/io/instance_json.hpp"

namespace ah = adarestart::harness;
namespace aio = adarestart::io;
using Json = nlohmann::json;

namespace {

// Flags describing a problem, either a file or a generator call.
struct ProblemFlags {
  std::string instance_path;
  std::string libsvm_path;
  std::string kind;
  std::optional<std::uint64_t> seed;
  long m = 100, n = 100, rank = 0;
  std::string family = "uniform";
  double sigma_min = 0.1, sigma_max = 1.0;
  long grid_rows = 10, grid_cols = 20;
  bool plant_optimal = false;
  long rows = 200, features = 50;
  double density = 0.1;
  std::string loss = "lasso";
  double lambda = 0.01;
  long hard_n = 500;
  double delta = 1e-4, alpha = 1e-4;

  void attach(CLI::App* app, bool allow_files = true) {
    if (allow_files) {
      app->add_option("--instance", instance_path, "Instance JSON file");
      app->add_option("--libsvm", libsvm_path, "LIBSVM data file (regression)");
    }
    app->add_option("--problem", kind, "Generate: matrix_game|box_lp|bilinear|regression|hard_example");
    app->add_option("--seed", seed, "Generator seed (required for generated problems)");
    app->add_option("--m", m, "Rows (matrix_game, bilinear)");
    app->add_option("--n", n, "Columns (matrix_game, bilinear)");
    app->add_option("--rank", rank, "Rank (bilinear; default min(m, n))");
    app->add_option("--family", family, "Matrix game family: uniform|normal");
    app->add_option("--sigma-min", sigma_min, "Smallest nonzero singular value (bilinear)");
    app->add_option("--sigma-max", sigma_max, "Largest singular value (bilinear)");
    app->add_option("--grid-rows", grid_rows, "Transport LP grid rows");
    app->add_option("--grid-cols", grid_cols, "Transport LP grid columns");
    app->add_flag("--plant-optimal", plant_optimal, "Transport LP with a planted optimal pair");
    app->add_option("--rows", rows, "Regression data rows");
    app->add_option("--features", features, "Regression features");
    app->add_option("--density", density, "Regression nonzero density");
    app->add_option("--loss", loss, "Regression loss: lasso|logistic");
    app->add_option("--lambda", lambda, "L1 weight");
    app->add_option("--hard-n", hard_n, "Hard example dimension");
    app->add_option("--delta", delta, "Hard example delta");
    app->add_option("--alpha", alpha, "Hard example alpha");
  }

  Json generator_spec() const {
    if (!seed && kind != "hard_example") throw std::invalid_argument("--seed is required for generated problems");
    Json j{{"kind", kind}, {"seed", seed.value_or(0)}};
    if (kind == "matrix_game") {
      j.update({{"m", m}, {"n", n}, {"family", family}});
    } else if (kind == "bilinear") {
      j.update({{"m", m}, {"n", n}, {"rank", rank > 0 ? rank : std::min(m, n)}, {"sigma_min", sigma_min},
                {"sigma_max", sigma_max}});
    } else if (kind == "box_lp") {
      j.update({{"grid_rows", grid_rows}, {"grid_cols", grid_cols}, {"plant_optimal", plant_optimal}});
    } else if (kind == "regression") {
      j.update({{"rows", rows}, {"features", features}, {"density", density}, {"loss", loss}, {"lambda", lambda}});
    } else if (kind == "hard_example") {
      j.update({{"n", hard_n}, {"delta", delta}, {"alpha", alpha}});
    } else {
      throw std::invalid_argument("unknown problem kind '" + kind + "'");
    }
    return j;
  }

  void apply(ah::ExperimentConfig& cfg) const {
    if (!instance_path.empty()) cfg.instance_path = instance_path;
    if (!libsvm_path.empty()) {
      cfg.libsvm = ah::LibsvmSource{libsvm_path, adarestart::problems::parse_loss(loss), lambda};
    }
    if (!kind.empty()) cfg.instance = aio::from_json(generator_spec());
  }
};

struct SolverFlags {
  std::string algorithm = "pdhg";
  std::string policy = "adaptive";
  long period = 0;
  std::optional<double> beta;
  long tau1 = 1;
  std::optional<double> gamma;
  double ratio = 1.0;
  bool average_lookahead = false;
  double ell0 = 1.0, eta = 1.25;
  bool reset_ell = false;
  long budget = 1000;
  std::optional<double> target;
  bool track_current = false;
  std::string trace_path, summary_path;

  void attach(CLI::App* app, bool with_outputs = true) {
    app->add_option("--algorithm", algorithm, "pdhg|extragradient|agd");
    app->add_option("--policy", policy, "none|fixed|adaptive|function");
    app->add_option("--period", period, "Fixed restart period");
    app->add_option("--beta", beta, "Adaptive restart parameter in (0, 1)");
    app->add_option("--tau1", tau1, "Length of the first epoch");
    app->add_option("--gamma", gamma, "Equal primal/dual step size");
    app->add_option("--ratio", ratio, "Primal/dual step ratio r");
    app->add_flag("--average-lookahead", average_lookahead, "Extragradient: average the lookahead points");
    app->add_option("--ell0", ell0, "Initial FISTA smoothness estimate");
    app->add_option("--eta", eta, "FISTA backtracking factor");
    app->add_flag("--reset-ell", reset_ell, "Reset the FISTA estimate at each restart");
    app->add_option("--budget", budget, "Iteration budget");
    app->add_option("--target", target, "Residual target");
    app->add_flag("--track-current", track_current, "Also record residuals of the current iterate");
    if (with_outputs) {
      app->add_option("--trace", trace_path, "Trace CSV output");
      app->add_option("--summary", summary_path, "Summary JSON output (default: stdout)");
    }
  }

  void apply(ah::ExperimentConfig& cfg) const {
    cfg.algorithm = ah::parse_algorithm(algorithm);
    cfg.policy = ah::parse_policy_kind(policy);
    cfg.period = period;
    cfg.beta = beta;
    cfg.tau1 = tau1;
    cfg.gamma = gamma;
    cfg.ratio = ratio;
    cfg.average_lookahead = average_lookahead;
    cfg.ell0 = ell0;
    cfg.eta = eta;
    cfg.reset_ell = reset_ell;
    cfg.budget = budget;
    cfg.target = target;
    cfg.track_current = track_current;
    if (!trace_path.empty()) cfg.trace_path = trace_path;
    if (!summary_path.empty()) cfg.summary_path = summary_path;
  }
};

void write_or_print(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive restarts for primal-dual and accelerated first-order methods"};
  app.require_subcommand(1);

  ProblemFlags run_problem;
  SolverFlags run_solver;
  auto* run = app.add_subcommand("run", "Run one solver configuration");
  run_problem.attach(run);
  run_solver.attach(run);

  ProblemFlags grid_problem;
  SolverFlags grid_solver;
  std::vector<long> periods{8, 32, 128, 512, 2048};
  std::string grid_out;
  auto* grid = app.add_subcommand("grid-search", "Pick the best fixed restart period");
  grid_problem.attach(grid);
  grid_solver.attach(grid, false);
  grid->add_option("--periods", periods, "Candidate periods");
  grid->add_option("--out", grid_out, "Result JSON (default: stdout)");

  ProblemFlags sweep_problem;
  std::vector<double> ratios = ah::default_ratio_grid();
  long sweep_iterations = 1000;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("ratio-sweep", "Primal/dual step ratio sweep for an LP");
  sweep_problem.attach(sweep);
  sweep->add_option("--ratios", ratios, "Candidate ratios");
  sweep->add_option("--iterations", sweep_iterations, "PDHG iterations per ratio");
  sweep->add_option("--out", sweep_out, "Result JSON (default: stdout)");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "assumption1|errorbound|epoch-bounds|contraction|sublinear|spectral|acceptance")
      ->required();

  ProblemFlags gen_problem;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-instance", "Write a generated instance as JSON");
  gen_problem.attach(gen, false);
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  ProblemFlags active_problem;
  SolverFlags active_solver;
  std::string active_out;
  auto* active = app.add_subcommand("active-set", "Last active-set change of an LP run");
  active_problem.attach(active);
  active_solver.attach(active, false);
  active->add_option("--out", active_out, "Result JSON (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      ah::ExperimentConfig cfg;
      run_problem.apply(cfg);
      run_solver.apply(cfg);
      return ah::cmd_run(cfg);
    }
    if (grid->parsed()) {
      ah::ExperimentConfig cfg;
      grid_problem.apply(cfg);
      grid_solver.apply(cfg);
      const auto result = ah::grid_search(cfg, std::vector<std::int64_t>(periods.begin(), periods.end()));
      Json runs = Json::array();
      for (const auto& r : result.runs) {
        runs.push_back({{"period", r.period},
                        {"iterations_to_target", r.iterations_to_target ? Json(*r.iterations_to_target) : Json()},
                        {"final_residual", r.final_residual},
                        {"error", r.error ? Json(*r.error) : Json()}});
      }
      write_or_print({{"best_period", result.best_period}, {"fallback", result.fallback}, {"runs", runs}}, grid_out);
      return 0;
    }
    if (sweep->parsed()) {
      ah::ExperimentConfig cfg;
      sweep_problem.apply(cfg);
      const auto inst = ah::load_instance(cfg);
      const auto* lp = std::get_if<adarestart::problems::BoxLpInstance>(&inst);
      if (!lp) throw std::invalid_argument("ratio-sweep needs a box_lp instance");
      const auto result = ah::lp_ratio_sweep(*lp, ratios, sweep_iterations);
      Json entries = Json::array();
      for (const auto& e : result.entries) entries.push_back({{"ratio", e.ratio}, {"final_residual", e.final_residual}});
      write_or_print({{"best_ratio", result.best_ratio},
                      {"primal_step", result.steps.primal},
                      {"dual_step", result.steps.dual},
                      {"entries", entries}},
                     sweep_out);
      return 0;
    }
    if (verify->parsed()) return ah::cmd_verify(suite);
    if (gen->parsed()) {
      const auto inst = aio::from_json(gen_problem.generator_spec());
      write_or_print(aio::to_json(inst), gen_out);
      return 0;
    }
    if (active->parsed()) {
      ah::ExperimentConfig cfg;
      active_problem.apply(cfg);
      active_solver.apply(cfg);
      cfg.active_set = true;
      const auto out = ah::run_experiment(cfg);
      if (out.active_sets.empty()) throw std::invalid_argument("active-set needs a box_lp instance");
      const std::size_t last = ah::last_active_set_change(out.active_sets);
      write_or_print({{"snapshots", out.active_sets.size()},
                      {"last_change_index", last},
                      {"last_change_iteration", out.active_sets[last].iteration}},
                     active_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
