#pragma once

#include <cmath>
#include <stdexcept>

#include "adarestart/core/contraction.hpp"
#include "adarestart/saddle/pdhg.hpp"

namespace adarestart {

// Distance growth factor of PDHG within one epoch, (1 - gamma_x gamma_y L^2)^(-1/2).
inline double pdhg_contraction_factor(const PdhgStepSizes& steps, double op_norm) {
  const double s = steps.primal * steps.dual * op_norm * op_norm;
  if (!(s < 1.0)) throw std::invalid_argument("pdhg_contraction_factor: step sizes too large");
  return 1.0 / std::sqrt(1.0 - s);
}

// Extragradient iterates and their averages never move farther from a
// solution than the epoch start.
inline constexpr double kExtragradientContractionFactor = 1.0;

}  // namespace adarestart
