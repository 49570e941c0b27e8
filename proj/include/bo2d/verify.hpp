// verify.hpp -- the cross-module invariant suite behind the `verify`
// command: hard checks (pass/fail with measured values) and adjudication
// findings (reported discrepancies that are not failures).

#pragma once

#include <string>
#include <vector>

namespace bo2d {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;   // violation magnitude (0 is perfect)
  double threshold = 0.0;  // pass iff measured <= threshold
  std::string detail;
};

// A numerical adjudication: a value the construction fixes on its own,
// reported against the stated reference it disagrees with (or confirms).
struct Finding {
  std::string name;
  double measured = 0.0;
  double reference = 0.0;
  std::string detail;
};

struct VerifyOptions {
  double mass_ratio = 1000.0;  // M/m for the correction checks
  double beta2 = 5.0 / 12.0;
  double tol = 1e-10;          // quadrature tolerance for the slow oracles
  // Self-test hook: corrupt one threshold to an unattainable value so the
  // failure path (exit code contract) can be exercised deliberately.
  bool corrupt_selftest = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<Finding> findings;
  bool all_pass = false;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace bo2d
