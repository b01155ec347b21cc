#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "adarestart/harness/active_set.hpp"
#include "adarestart/harness/config.hpp"
#include "adarestart/harness/experiment.hpp"
#include "adarestart/harness/search.hpp"

using namespace adarestart;
using namespace adarestart::harness;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "adarestart_harness_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

ExperimentConfig game_config() {
  ExperimentConfig cfg;
  cfg.instance = problems::generate_matrix_game(10, 8, problems::GameFamily::Normal, 31);
  cfg.algorithm = Algorithm::Pdhg;
  cfg.budget = 400;
  return cfg;
}

ActiveSetSnapshot snap(std::int64_t it, std::vector<signed char> s) { return {it, std::move(s)}; }

}  // namespace

TEST(Config, Validation) {
  ExperimentConfig cfg;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = game_config();
  EXPECT_NO_THROW(validate(cfg));
  cfg.instance_path = "x.json";
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = game_config();
  cfg.budget = 0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = game_config();
  cfg.policy = PolicyKind::Fixed;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  EXPECT_THROW(parse_algorithm("newton"), std::invalid_argument);
}

TEST(CmdRun, ExitCodes) {
  auto cfg = game_config();
  cfg.summary_path = scratch("summary.json").string();
  cfg.trace_path = scratch("trace.csv").string();
  std::ostringstream log;
  EXPECT_EQ(cmd_run(cfg, log), 0);
  cfg.target = 1e-30;
  EXPECT_EQ(cmd_run(cfg, log), 2);
  cfg.target = 10.0;
  EXPECT_EQ(cmd_run(cfg, log), 0);
  cfg.algorithm = Algorithm::Agd;
  EXPECT_EQ(cmd_run(cfg, log), 1);
  EXPECT_NE(log.str().find("error"), std::string::npos);

  std::ifstream summary(*cfg.summary_path);
  const auto j = nlohmann::json::parse(summary);
  EXPECT_TRUE(j.contains("final_residual"));
  EXPECT_TRUE(j.contains("epoch_lengths"));
}

TEST(CmdRun, TraceFilesAreByteIdentical) {
  auto cfg = game_config();
  cfg.track_current = true;
  std::ostringstream log;
  cfg.summary_path = scratch("s1.json").string();
  cfg.trace_path = scratch("a.csv").string();
  ASSERT_EQ(cmd_run(cfg, log), 0);
  cfg.trace_path = scratch("b.csv").string();
  ASSERT_EQ(cmd_run(cfg, log), 0);
  EXPECT_EQ(read_file(scratch("a.csv").string()), read_file(scratch("b.csv").string()));
  EXPECT_EQ(read_file(scratch("a.csv.current.csv").string()), read_file(scratch("b.csv.current.csv").string()));
  EXPECT_FALSE(read_file(scratch("a.csv").string()).empty());
}

TEST(Experiment, NoRestartPrefixMatchesFixedBudget) {
  auto cfg = game_config();
  cfg.policy = PolicyKind::None;
  const auto none = run_experiment(cfg);
  cfg.policy = PolicyKind::Fixed;
  cfg.period = cfg.budget;
  const auto fixed = run_experiment(cfg);
  ASSERT_EQ(none.result.trace.size(), fixed.result.trace.size());
  for (std::size_t i = 0; i + 1 < none.result.trace.size(); ++i) {
    EXPECT_EQ(none.result.trace.rows[i], fixed.result.trace.rows[i]);
  }
}

TEST(Experiment, SmoothProblemsRunWithAgd) {
  ExperimentConfig cfg;
  cfg.instance = problems::generate_regression(30, 8, 0.5, problems::Loss::Lasso, 0.1, 2);
  cfg.algorithm = Algorithm::Agd;
  cfg.budget = 200;
  const auto out = run_experiment(cfg);
  EXPECT_EQ(out.problem_kind, "regression");
  EXPECT_EQ(out.result.trace.size(), 200u);
  ExperimentConfig hard;
  hard.instance = problems::HardExampleInstance{20, 0.1, 1e-2};
  hard.algorithm = Algorithm::Agd;
  hard.budget = 100;
  EXPECT_GT(run_experiment(hard).result.trace.size(), 0u);
}

TEST(GridSearch, SingletonAndChoice) {
  auto cfg = game_config();
  cfg.target = 1e-3;
  cfg.budget = 3000;
  const auto single = grid_search(cfg, {64});
  EXPECT_EQ(single.best_period, 64);
  ASSERT_EQ(single.runs.size(), 1u);

  const auto many = grid_search(cfg, {512, 8, 64, 64});
  ASSERT_EQ(many.runs.size(), 3u);
  EXPECT_EQ(many.runs[0].period, 8);
  if (!many.fallback) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& r : many.runs) {
      if (r.iterations_to_target) best = std::min(best, *r.iterations_to_target);
    }
    for (const auto& r : many.runs) {
      if (r.period == many.best_period) {
        ASSERT_TRUE(r.iterations_to_target.has_value());
        EXPECT_EQ(*r.iterations_to_target, best);
      }
    }
  }
  EXPECT_THROW(grid_search(cfg, {}), std::invalid_argument);
}

TEST(GridSearch, FallbackWhenTargetUnreachable) {
  auto cfg = game_config();
  cfg.target = 1e-300;
  cfg.budget = 200;
  const auto out = grid_search(cfg, {8, 32, 128});
  EXPECT_TRUE(out.fallback);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : out.runs) best = std::min(best, r.final_residual);
  for (const auto& r : out.runs) {
    if (r.period == out.best_period) EXPECT_EQ(r.final_residual, best);
  }
}

TEST(RatioSweep, SingletonGivesEqualSteps) {
  const auto lp = problems::generate_transport_lp(3, 4, 5, true);
  const auto out = lp_ratio_sweep(lp, {1.0}, 50);
  const double L = op_norm(problems::to_saddle(lp).op()).value;
  EXPECT_EQ(out.best_ratio, 1.0);
  EXPECT_NEAR(out.steps.primal, std::sqrt(0.9) / L, 1e-15);
  EXPECT_NEAR(out.steps.dual, std::sqrt(0.9) / L, 1e-15);
}

TEST(RatioSweep, Deterministic) {
  const auto lp = problems::generate_transport_lp(3, 4, 6, true);
  const auto a = lp_ratio_sweep(lp, {0.1, 1.0, 10.0}, 200);
  const auto b = lp_ratio_sweep(lp, {0.1, 1.0, 10.0}, 200);
  EXPECT_EQ(a.best_ratio, b.best_ratio);
  ASSERT_EQ(a.entries.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a.entries[i].final_residual, b.entries[i].final_residual);
  EXPECT_THROW(lp_ratio_sweep(lp, {}, 10), std::invalid_argument);
}

TEST(ActiveSet, LastChange) {
  EXPECT_EQ(last_active_set_change({snap(0, {0, 1}), snap(100, {0, 1}), snap(200, {0, 1})}), 0u);
  EXPECT_EQ(last_active_set_change({snap(0, {0, 1}), snap(100, {-1, 1}), snap(200, {-1, 1})}), 1u);
  EXPECT_EQ(last_active_set_change({snap(0, {0}), snap(100, {1}), snap(200, {0})}), 2u);
  EXPECT_THROW(last_active_set_change({}), std::invalid_argument);
}

TEST(ActiveSet, StatusOfPoint) {
  const BoxBounds b(Eigen::Vector3d(0, 0, -kInf), Eigen::Vector3d(1, kInf, 0));
  EXPECT_EQ(active_set_of(Eigen::Vector3d(0, 0.5, 0), b), (std::vector<signed char>{-1, 0, 1}));
  EXPECT_EQ(active_set_of(Eigen::Vector3d(1, 0, -3), b), (std::vector<signed char>{1, -1, 0}));
}

TEST(ActiveSet, RecordedForLp) {
  ExperimentConfig cfg;
  cfg.instance = problems::generate_transport_lp(3, 4, 7, true);
  cfg.active_set = true;
  cfg.budget = 350;
  const auto out = run_experiment(cfg);
  ASSERT_GE(out.active_sets.size(), 4u);
  EXPECT_EQ(out.active_sets.front().iteration, 0);
  EXPECT_LE(last_active_set_change(out.active_sets), out.active_sets.size() - 1);
}
