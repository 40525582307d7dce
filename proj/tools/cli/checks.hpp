#pragma once

#include <string>
#include <vector>

namespace cylbif::cli {

struct CheckResult {
  std::string suite;
  std::string property;
  bool passed;
  double value;  ///< the measured quantity (worst case over the sampled set)
  double limit;  ///< the threshold it is compared with
  std::string detail;
};

/// specfun, spectrum, bifurcation, delaunay, pde.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws UsageError for unknown names.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace cylbif::cli
