#pragma once

#include <string>
#include <vector>

#include "landau/gauge.hpp"
#include "landau/phasespace.hpp"

namespace landau {

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
  bool skipped = false;  // not applicable; never counts as a failure
};

struct SuiteOptions {
  int max_index = -1;          // -1: the suite's own default
  double tolerance_scale = 1;  // multiplies every numeric tolerance
  Params params;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite. Random draws use fixed
/// seeds, so repeated runs report identical residuals.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt = {});

bool all_pass(const std::vector<CheckResult>& results);

/// Everything `transform` reports for one gauge function and one (n, l).
struct TransformReport {
  PhasePoly hamiltonian;  // U * H_L * U^-1
  std::vector<CheckResult> checks;
};
TransformReport gauge_transform_report(const GaugeFn& g, int n, int l, const SuiteOptions& opt = {});

}  // namespace landau
