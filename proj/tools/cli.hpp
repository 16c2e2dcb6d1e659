#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xaax::cli {

/// Process exit statuses.
inline constexpr int kSuccess = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Parses `args` (without the program name) and runs one verb. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xaax::cli
