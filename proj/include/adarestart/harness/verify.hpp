#pragma once

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "adarestart/harness/acceptance.hpp"

namespace adarestart::harness {

inline const std::map<std::string, std::vector<std::function<CriterionOutcome()>>>& verify_suites() {
  static const std::map<std::string, std::vector<std::function<CriterionOutcome()>>> suites{
      {"assumption1", {criterion1_localized_gap_scaling}},
      {"errorbound", {criterion2_error_bound}},
      {"epoch-bounds", {criterion3_pdhg_budget, criterion4_epoch_bounds}},
      {"contraction", {criterion9_extragradient_contracts}},
      {"sublinear", {criterion6_fista_sublinear}},
      {"spectral", {criterion10_lower_bound_spectrum, criterion11_op_norm}},
      {"acceptance", acceptance_criteria()},
  };
  return suites;
}

inline void print_outcome(const CriterionOutcome& o, std::ostream& out) {
  out << (o.passed ? "[PASS] " : "[FAIL] ") << "criterion " << o.id << ": " << o.title << " -- " << o.detail << " ("
      << acceptance_detail::fmt(o.seconds) << " s, limit " << o.time_limit << " s)\n";
}

// Exit status 0 iff every check in the suite passes; unknown suite gives 1.
inline int cmd_verify(const std::string& suite, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  const auto& suites = verify_suites();
  const auto it = suites.find(suite);
  if (it == suites.end()) {
    err << "unknown suite '" << suite << "'; available:";
    for (const auto& [name, _] : suites) err << ' ' << name;
    err << '\n';
    return 1;
  }
  bool all = true;
  for (const auto& check : it->second) {
    const CriterionOutcome o = check();
    print_outcome(o, out);
    out.flush();
    all = all && o.passed;
  }
  return all ? 0 : 1;
}

}  // namespace adarestart::harness
