#ifndef SQBASIS_VERIFY_HPP
#define SQBASIS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sqbasis {

/// One verification criterion outcome. `details` is deterministic for a
/// fixed seed; `seconds` is informational and excluded from persisted
/// reports so reruns stay byte-identical.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  /// Reduced trial counts; also skips the reproducibility double-run, which
  /// itself shells out two quick-scale runs.
  bool quick = false;
  /// Path of this tool's own binary, used by the reproducibility check to
  /// rerun itself; empty disables that check.
  std::string cliPath;
};

/// Runs the verification suite in criterion order, invoking `onResult`
/// after each criterion if given. Returns all results.
std::vector<CriterionResult> runVerificationSuite(
    const VerifyOptions& options,
    const std::function<void(const CriterionResult&)>& onResult = {});

bool allPass(const std::vector<CriterionResult>& results);

}  // namespace sqbasis

#endif  // SQBASIS_VERIFY_HPP
