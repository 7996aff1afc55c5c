#pragma once

#include <string>
#include <vector>

namespace penney {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  /// One line per check, "PASS name: detail" or "FAIL name: detail".
  std::string text() const;
};

/// Cross-module property sweep over small lengths. Deterministic: the same
/// build always produces the same report.
VerificationReport run_verification();

}  // namespace penney
