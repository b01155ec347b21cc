#include <clocale>
#include <fstream>
#include <limits>
#include <locale>
#include <sstream>

#include <gtest/gtest.h>

#include "adarestart/io/instance_json.hpp"
#include "adarestart/io/libsvm.hpp"
#include "adarestart/io/trace_csv.hpp"

using namespace adarestart;
using namespace adarestart::io;

namespace {

std::string fixture(const std::string& name) { return std::string(ADARESTART_FIXTURE_DIR) + "/" + name; }

SolverTrace sample_trace() {
  SolverTrace t;
  t.rows = {{1, 1, 1, 0.1, std::nullopt, true, std::nullopt, std::nullopt},
            {2, 2, 1, 1.0 / 3.0, 0.123456789012345678, false, std::nullopt, std::nullopt},
            {3, 2, 2, 2.5e-300, 1e300, true, std::nullopt, std::nullopt},
            {4, 3, 1, std::numeric_limits<double>::denorm_min(), -0.0, false, std::nullopt, std::nullopt}};
  return t;
}

}  // namespace

TEST(Libsvm, SingleRecord) {
  std::istringstream in("1 1:0.5 3:2.0\n");
  const auto recs = parse_libsvm_records(in);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].label, 1.0);
  ASSERT_EQ(recs[0].features.size(), 2u);
  EXPECT_EQ(recs[0].features[0], (std::pair<Eigen::Index, double>{1, 0.5}));
  EXPECT_EQ(recs[0].features[1], (std::pair<Eigen::Index, double>{3, 2.0}));
}

TEST(Libsvm, TinyFixtureMatchesHandMatrix) {
  std::ifstream in(fixture("tiny.libsvm"));
  ASSERT_TRUE(in);
  const auto data = parse_libsvm(in);
  Eigen::MatrixXd expected(3, 3);
  expected << 0.5, 0, 2, 0, 1.5, 0, -1, 0, 4;
  EXPECT_EQ(Eigen::MatrixXd(data.matrix), expected);
  EXPECT_EQ(data.labels, Eigen::Vector3d(1, -1, 0));
}

TEST(Libsvm, PreprocessedTinyFixture) {
  std::ifstream in(fixture("tiny.libsvm"));
  const auto ds = load_libsvm(in);
  const Eigen::MatrixXd m(ds.matrix);
  ASSERT_EQ(m.cols(), 4);
  Eigen::MatrixXd expected(3, 4);
  const double c1 = std::sqrt(1.25), c3 = std::sqrt(20.0), icpt = 1.0 / std::sqrt(3.0);
  expected << 0.5 / c1, 0, 2 / c3, icpt, 0, 1, 0, icpt, -1 / c1, 0, 4 / c3, icpt;
  EXPECT_LE((m - expected).norm(), 1e-15);
  EXPECT_EQ(ds.column_map, (std::vector<Eigen::Index>{0, 1, 2, -1}));
}

TEST(Libsvm, EmptyColumnsRemoved) {
  std::ifstream in(fixture("single_feature.libsvm"));
  const auto ds = load_libsvm(in, 3);
  EXPECT_EQ(ds.matrix.cols(), 2);
  EXPECT_EQ(ds.column_map, (std::vector<Eigen::Index>{1, -1}));
  const Eigen::MatrixXd m(ds.matrix);
  for (Eigen::Index j = 0; j < m.cols(); ++j) EXPECT_NEAR(m.col(j).norm(), 1.0, 1e-12);
  EXPECT_NEAR(m(0, 0), 0.6, 1e-15);
}

TEST(Libsvm, ErrorsCarryLineNumbers) {
  std::ifstream in(fixture("bad_order.libsvm"));
  try {
    parse_libsvm(in);
    FAIL() << "expected a parse error";
  } catch (const LibsvmParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  for (const char* text : {"1 2:1 2:3\n", "\n\n1 0:1\n", "1 3\n", "x 1:1\n", "1 1:abc\n"}) {
    std::istringstream s(text);
    EXPECT_THROW(parse_libsvm(s), LibsvmParseError) << text;
  }
  std::istringstream third("# header\n\n1 1:1 x:2\n");
  try {
    parse_libsvm(third);
    FAIL();
  } catch (const LibsvmParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(TraceCsv, EmptyTraceIsHeaderOnly) {
  EXPECT_EQ(trace_to_string(SolverTrace{}), std::string(kTraceHeader) + "\n");
}

TEST(TraceCsv, SingleRowIsTwoLines) {
  SolverTrace t;
  t.rows = {{1, 1, 1, 0.5, std::nullopt, true, std::nullopt, std::nullopt}};
  EXPECT_EQ(trace_to_string(t), std::string(kTraceHeader) + "\n1,1,1,0.5,,1\n");
}

TEST(TraceCsv, RoundTripIsExact) {
  const SolverTrace t = sample_trace();
  std::istringstream in(trace_to_string(t));
  const SolverTrace back = read_trace(in);
  ASSERT_EQ(back.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(back.rows[i].total_iter, t.rows[i].total_iter);
    EXPECT_EQ(back.rows[i].epoch, t.rows[i].epoch);
    EXPECT_EQ(back.rows[i].inner_iter, t.rows[i].inner_iter);
    EXPECT_EQ(back.rows[i].residual, t.rows[i].residual);
    EXPECT_EQ(back.rows[i].potential, t.rows[i].potential);
    EXPECT_EQ(back.rows[i].restarted, t.rows[i].restarted);
  }
}

TEST(TraceCsv, LocaleIndependent) {
  const std::string before = trace_to_string(sample_trace());
  std::ostringstream imbued;
  try {
    imbued.imbue(std::locale("de_DE.UTF-8"));
  } catch (const std::runtime_error&) {
    // Fall back to a locale with grouping that always exists.
    struct Grouping : std::numpunct<char> {
      char do_decimal_point() const override { return ','; }
      char do_thousands_sep() const override { return '.'; }
      std::string do_grouping() const override { return "\3"; }
    };
    imbued.imbue(std::locale(std::locale::classic(), new Grouping));
  }
  SolverTrace big;
  big.rows = {{1234567, 1, 1234567, 1234.5, 0.25, true, std::nullopt, std::nullopt}};
  write_trace(big, imbued);
  EXPECT_EQ(imbued.str(), std::string(kTraceHeader) + "\n1234567,1,1234567,1234.5,0.25,1\n");
  EXPECT_EQ(trace_to_string(sample_trace()), before);
}

TEST(TraceCsv, RejectsMalformed) {
  std::istringstream no_header("1,1,1,0.5,,1\n");
  EXPECT_THROW(read_trace(no_header), std::runtime_error);
  std::istringstream bad_flag(std::string(kTraceHeader) + "\n1,1,1,0.5,,2\n");
  EXPECT_THROW(read_trace(bad_flag), std::runtime_error);
  std::istringstream short_row(std::string(kTraceHeader) + "\n1,1,1\n");
  EXPECT_THROW(read_trace(short_row), std::runtime_error);
}

TEST(TraceCsv, CurrentResidualCompanion) {
  SolverTrace t;
  t.rows = {{1, 1, 1, 0.5, std::nullopt, true, 0.25, std::nullopt}, {2, 1, 2, 0.5, std::nullopt, false, std::nullopt, std::nullopt}};
  std::ostringstream out;
  write_current_residuals(t, out);
  EXPECT_EQ(out.str(), std::string(kCurrentHeader) + "\n1,0.25\n");
}

TEST(InstanceJson, MatrixGameRoundTrip) {
  const Instance a = problems::generate_matrix_game(4, 3, problems::GameFamily::UniformNegative, 5);
  const Instance b = parse_instance(serialize_instance(a));
  const auto& ga = std::get<problems::MatrixGameInstance>(a);
  const auto& gb = std::get<problems::MatrixGameInstance>(b);
  EXPECT_EQ(ga.A, gb.A);
  EXPECT_EQ(ga.family, gb.family);
  EXPECT_EQ(ga.seed, gb.seed);
  EXPECT_EQ(serialize_instance(b), serialize_instance(a));
}

TEST(InstanceJson, BoxLpRoundTripWithInfiniteBounds) {
  auto lp = problems::generate_transport_lp(2, 3, 4, true);
  lp.bounds.upper[1] = kInf;
  lp.bounds.lower[2] = -kInf;
  lp.bounds.upper[2] = kInf;
  const std::string text = serialize_instance(lp);
  EXPECT_NE(text.find("\"inf\""), std::string::npos);
  const auto back = std::get<problems::BoxLpInstance>(parse_instance(text));
  EXPECT_EQ(back.bounds, lp.bounds);
  EXPECT_EQ(Eigen::MatrixXd(back.A), Eigen::MatrixXd(lp.A));
  EXPECT_EQ(back.c, lp.c);
  EXPECT_EQ(back.b, lp.b);
  ASSERT_TRUE(back.planted.has_value());
  EXPECT_EQ(*back.planted, *lp.planted);
  EXPECT_TRUE(back.planted_is_optimal);
  EXPECT_EQ(serialize_instance(back), text);
}

TEST(InstanceJson, BilinearRoundTrip) {
  const auto inst = problems::generate_bilinear(5, 4, 2, 0.3, 1.0, 8);
  const auto back = std::get<problems::BilinearInstance>(parse_instance(serialize_instance(inst)));
  EXPECT_EQ(back.A, inst.A);
  EXPECT_EQ(back.c, inst.c);
  EXPECT_EQ(back.b, inst.b);
  EXPECT_EQ(back.rank(), 2);
}

TEST(InstanceJson, RegressionAndHardExampleRoundTrip) {
  auto reg = problems::generate_regression(6, 4, 0.5, problems::Loss::Logistic, 0.2, 3);
  reg.reference_objective = 1.25;
  const auto back = std::get<problems::RegressionInstance>(parse_instance(serialize_instance(reg)));
  EXPECT_EQ(Eigen::MatrixXd(back.data), Eigen::MatrixXd(reg.data));
  EXPECT_EQ(back.labels, reg.labels);
  EXPECT_EQ(back.loss, reg.loss);
  EXPECT_EQ(back.lambda, reg.lambda);
  EXPECT_EQ(back.reference_objective, reg.reference_objective);

  const problems::HardExampleInstance hard{17, 0.01, 0.002};
  const auto hb = std::get<problems::HardExampleInstance>(parse_instance(serialize_instance(hard)));
  EXPECT_EQ(hb.n, 17);
  EXPECT_EQ(hb.delta, 0.01);
  EXPECT_EQ(hb.alpha, 0.002);
}

TEST(InstanceJson, GeneratedFromDimensionFields) {
  const auto g = std::get<problems::MatrixGameInstance>(
      parse_instance(R"({"kind":"matrix_game","seed":7,"m":3,"n":2,"family":"normal"})"));
  EXPECT_EQ(g.A, problems::generate_matrix_game(3, 2, problems::GameFamily::Normal, 7).A);
  EXPECT_THROW(parse_instance(R"({"kind":"nope"})"), std::invalid_argument);
  EXPECT_EQ(instance_kind(Instance(problems::HardExampleInstance{})), "hard_example");
}
