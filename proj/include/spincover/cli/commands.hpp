#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spincover::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one `spincover` invocation. `args` excludes the program name.
/// Output is written to `out` only when the command succeeds; failures print a
/// single "<Code> key=value ..." line to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace spincover::cli
