#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinf {

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

// Runs every module's invariant battery at default tolerances.
std::vector<CheckResult> run_verify(int N, unsigned seed = 12345);

// Prints one line per check; returns true when all pass.
bool report_verify(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace spinf
