#pragma once

#include <limits>
#include <string>

namespace adarestart {

// Outcome of a run-time verification of an inequality the theory promises.
// worst_margin is min over checked instances of (bound - observed); negative
// means violated.
struct CheckReport {
  std::string name;
  bool passed = true;
  bool applicable = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  long checked = 0;
  std::string detail;

  void record(double bound, double observed, double slack = 0.0) {
    ++checked;
    const double margin = bound - observed;
    if (margin < worst_margin) worst_margin = margin;
    if (observed > bound + slack) passed = false;
  }

  static CheckReport not_applicable(std::string name, std::string why) {
    CheckReport r;
    r.name = std::move(name);
    r.applicable = false;
    r.passed = false;
    r.detail = std::move(why);
    return r;
  }
};

}  // namespace adarestart
