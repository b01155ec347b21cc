#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "adarestart/core/restart.hpp"
#include "adarestart/io/instance_json.hpp"
#include "adarestart/io/libsvm.hpp"

namespace adarestart::harness {

enum class Algorithm { Pdhg, Extragradient, Agd };
enum class PolicyKind { None, Fixed, Adaptive, Function };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Pdhg: return "pdhg";
    case Algorithm::Extragradient: return "extragradient";
    default: return "agd";
  }
}

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "pdhg") return Algorithm::Pdhg;
  if (s == "extragradient") return Algorithm::Extragradient;
  if (s == "agd" || s == "fista") return Algorithm::Agd;
  throw std::invalid_argument("unknown algorithm: " + std::string(s));
}

inline PolicyKind parse_policy_kind(std::string_view s) {
  if (s == "none") return PolicyKind::None;
  if (s == "fixed") return PolicyKind::Fixed;
  if (s == "adaptive") return PolicyKind::Adaptive;
  if (s == "function") return PolicyKind::Function;
  throw std::invalid_argument("unknown restart policy: " + std::string(s));
}

struct LibsvmSource {
  std::string path;
  problems::Loss loss = problems::Loss::Lasso;
  double lambda = 0.0;
};

struct ExperimentConfig {
  // Exactly one problem source.
  std::optional<io::Instance> instance;
  std::optional<std::string> instance_path;
  std::optional<LibsvmSource> libsvm;

  Algorithm algorithm = Algorithm::Pdhg;
  PolicyKind policy = PolicyKind::Adaptive;
  std::int64_t period = 0;     // Fixed
  std::optional<double> beta;  // defaults: 1/2 saddle methods, 1/4 AGD
  std::int64_t tau1 = 1;

  // Saddle step sizes: gamma for equal steps, otherwise the primal/dual ratio r
  // with gamma_y = sqrt(0.9 / r) / ||K||, gamma_x = r gamma_y.
  std::optional<double> gamma;
  double ratio = 1.0;
  bool average_lookahead = false;  // extragradient

  double ell0 = 1.0;
  double eta = 1.25;
  bool reset_ell = false;

  std::int64_t budget = 1000;
  std::optional<double> target;
  bool track_current = false;
  bool active_set = false;  // LP only

  std::optional<std::string> trace_path;
  std::optional<std::string> summary_path;
};

inline double effective_beta(const ExperimentConfig& cfg) {
  return cfg.beta.value_or(cfg.algorithm == Algorithm::Agd ? 0.25 : 0.5);
}

inline RestartPolicy build_policy(const ExperimentConfig& cfg) {
  switch (cfg.policy) {
    case PolicyKind::None: return NoRestart{};
    case PolicyKind::Fixed: return FixedPeriod{cfg.period};
    case PolicyKind::Function: return FunctionScheme{};
    default: {
      AdaptiveRestart a;
      a.beta = effective_beta(cfg);
      a.phi = cfg.algorithm == Algorithm::Agd ? PhiFunction::shifted_square() : PhiFunction::linear();
      a.first_epoch_length = cfg.tau1;
      return a;
    }
  }
}

inline void validate(const ExperimentConfig& cfg) {
  const int sources = (cfg.instance ? 1 : 0) + (cfg.instance_path ? 1 : 0) + (cfg.libsvm ? 1 : 0);
  if (sources != 1) throw std::invalid_argument("exactly one problem source is required");
  if (cfg.budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (cfg.gamma && !(*cfg.gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(cfg.ratio > 0.0)) throw std::invalid_argument("step ratio must be positive");
  if (cfg.target && !(*cfg.target >= 0.0)) throw std::invalid_argument("target must be nonnegative");
  validate_policy(build_policy(cfg));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline io::Instance load_instance(const ExperimentConfig& cfg) {
  if (cfg.instance) return *cfg.instance;
  if (cfg.instance_path) return io::parse_instance(read_file(*cfg.instance_path));
  std::ifstream in(cfg.libsvm->path);
  if (!in) throw std::runtime_error("cannot open " + cfg.libsvm->path);
  io::LibsvmDataset data = io::load_libsvm(in);
  problems::RegressionInstance inst;
  inst.data = std::move(data.matrix);
  inst.labels = std::move(data.labels);
  inst.loss = cfg.libsvm->loss;
  inst.lambda = cfg.libsvm->lambda;
  return inst;
}

}  // namespace adarestart::harness
