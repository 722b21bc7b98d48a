#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hkt::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the directory for reports when --out is not given.
inline constexpr const char* kReportDirEnv = "HKT_REPORT_DIR";

/// Entry point of the hkt tool. args excludes the program name. Exit codes: 0 all checks
/// pass, 1 some check failed, 2 usage or precondition error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkt::cli
