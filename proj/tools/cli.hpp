#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace linrel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitDomain = 2;

inline constexpr int kReportVersion = 1;

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 on success, 1 on a failed check or internal
/// inconsistency, 2 on parse or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linrel::cli
