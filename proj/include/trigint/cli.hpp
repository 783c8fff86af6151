#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trigint {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification reports failures, 2 on
/// usage errors (unknown flags, out-of-domain parameters).
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default --digits: TRIG_ENGINE_DIGITS if set and valid, else 20.
int default_cli_digits();

}  // namespace trigint
