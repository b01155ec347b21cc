#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "adarestart/theory/bounds.hpp"

using namespace adarestart;
using namespace adarestart::theory;

namespace {

SolverTrace trace_with_epochs(const std::vector<std::int64_t>& lengths) {
  SolverTrace t;
  std::int64_t total = 0;
  for (std::size_t e = 0; e < lengths.size(); ++e) {
    for (std::int64_t k = 1; k <= lengths[e]; ++k) {
      ++total;
      t.rows.push_back({total, static_cast<std::int64_t>(e + 1), k, 1.0, std::nullopt, k == lengths[e], 0.0,
                        std::nullopt});
    }
  }
  return t;
}

}  // namespace

TEST(TStar, PdhgExampleValue) {
  TheoryConstants c;
  c.L = 1.0;
  c.theta = 1.0;
  c.gamma = 0.7;
  c.beta = 0.5;
  // (1 + 0.51^{-1/2})^2 * 9 / 1.4 + 2, evaluated independently.
  const double q = 1.0 / std::sqrt(0.51);
  const double expected = (1 + q) * (1 + q) * 9.0 / 1.4 + 2.0;
  EXPECT_NEAR(t_star_pdhg(c), expected, 1e-12);
  EXPECT_NEAR(t_star_pdhg(c), 39.04, 0.01);
}

TEST(TStar, PdhgScalesInverselyWithTheta) {
  TheoryConstants c;
  c.gamma = 0.5;
  const double base = t_star_pdhg(c) - 2.0;
  c.theta = 0.5;
  EXPECT_NEAR(t_star_pdhg(c) - 2.0, 2.0 * base, 1e-12 * base);
}

TEST(TStar, PdhgRejectsLargeSteps) {
  TheoryConstants c;
  c.gamma = 1.0;
  EXPECT_THROW(t_star_pdhg(c), std::invalid_argument);
  EXPECT_THROW(pdhg_q(1.5, 1.0), std::invalid_argument);
  c.gamma = 0.5;
  c.beta = 1.0;
  EXPECT_THROW(t_star_pdhg(c), std::invalid_argument);
}

TEST(TStar, Extragradient) {
  TheoryConstants c;
  c.gamma = 0.5;
  c.beta = 0.5;
  EXPECT_NEAR(t_star_extragradient(c), 4.0 * 9.0 / 0.5 + 2.0, 1e-12);
}

TEST(TStar, AgdExampleAndLowerBound) {
  EXPECT_NEAR(t_star_agd(1.0, 0.25), 6.0 + 3.0 * std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(t_star_agd(1.0, 0.25), 12.708, 1e-3);
  for (double kh : {0.01, 1.0, 37.0, 1e4}) {
    for (double beta : {0.1, 0.25, 0.5, 0.9}) {
      const double t = t_star_agd(kh, beta);
      EXPECT_GE(t, 2.0 * std::sqrt(kh));
      // t* satisfies its defining inequality.
      EXPECT_GE(agd_t_star_slack(t, kh, beta), -1e-9 * kh);
    }
  }
}

TEST(TStar, MonotoneSweeps) {
  double prev = 0.0;
  for (double kh = 0.1; kh < 1e6; kh *= 3.0) {
    const double t = t_star_agd(kh, 0.25);
    EXPECT_GT(t, prev);
    prev = t;
  }
  prev = std::numeric_limits<double>::infinity();
  for (double beta = 0.05; beta < 1.0; beta += 0.05) {
    const double t = t_star_agd(10.0, beta);
    EXPECT_LT(t, prev);
    prev = t;
  }
}

TEST(Budget, PdhgExample) {
  TheoryConstants c;
  c.L = 10.0;
  c.theta = 1.0;
  const double expected = 570.0 * std::log(4e6) + 570.0 * std::log(770.0);
  EXPECT_NEAR(iteration_budget_pdhg(c, 1e-6, 1.0), expected, 1e-9 * expected);
  EXPECT_NEAR(iteration_budget_pdhg(c, 1e-6, 1.0), 12454, 1.0);
  EXPECT_THROW(iteration_budget_pdhg(c, 1.0, 1.0), std::invalid_argument);
}

TEST(Budget, AgdExample) {
  const double expected = 8.5 * 101.0 * std::log(8e6) + 2600.0 * std::log(1200.0);
  EXPECT_NEAR(iteration_budget_agd(1e4, 1e-6, 1.0), expected, 1e-9 * expected);
  EXPECT_NEAR(iteration_budget_agd(1e4, 1e-6, 1.0), 32082, 5.0);
  EXPECT_THROW(iteration_budget_agd(1e4, 0.0, 1.0), std::invalid_argument);
}

TEST(FixedPeriod, Values) {
  EXPECT_NEAR(optimal_fixed_period(1.0), 2.0 * std::numbers::e, 1e-12);
  EXPECT_NEAR(optimal_fixed_period(1.0), 5.437, 1e-3);
  EXPECT_NEAR(optimal_fixed_period(1e4), 543.7, 0.1);
  EXPECT_NEAR(hard_example_fixed_period(500, 1e-4), 6078, 1.0);
  EXPECT_THROW(optimal_fixed_period(0.5), std::invalid_argument);
}

TEST(RateConstants, Values) {
  EXPECT_DOUBLE_EQ(pdhg_rate_constant(0.25), 2.0);
  EXPECT_DOUBLE_EQ(extragradient_rate_constant(0.5), 4.0);
  EXPECT_DOUBLE_EQ(agd_rate_constant(2.0, 1.25), 5.0);
  EXPECT_DOUBLE_EQ(kappa_hat(6.0, 2.0), 3.0);
  TheoryConstants c;
  c.L = 4.0;
  c.eta = 1.25;
  c.alpha = 0.5;
  EXPECT_DOUBLE_EQ(c.kappa_bar(), 10.0);
}

TEST(EpochBounds, TrivialTracePasses) {
  const auto r = verify_epoch_bounds(trace_with_epochs({1, 5, 5, 4}), 5.0, 1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.checked, 8);
}

TEST(EpochBounds, LongEpochFails) {
  EXPECT_FALSE(verify_epoch_bounds(trace_with_epochs({1, 9}), 5.0, 1).passed);
  // A long first epoch is allowed through tau1.
  EXPECT_TRUE(verify_epoch_bounds(trace_with_epochs({8, 3}), 5.0, 8).passed);
}
