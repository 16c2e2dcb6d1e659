#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace xaax {

struct VerifyOptions {
  /// Largest block order n exercised by each suite.
  std::size_t n_max = 8;
  /// Run independent suites on separate threads. Results keep their order.
  bool parallel = false;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  /// Number of individual checks evaluated.
  std::size_t checks = 0;
  /// First failing check, empty on success.
  std::string failure;
};

/// Names of the suites run by run_verification, in report order.
std::vector<std::string> verification_suites();

std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// Runs a single named suite; throws OutOfRange for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace xaax
