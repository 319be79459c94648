#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpa::cli {

/// Parses and executes one command line (program name excluded). Data is
/// written to `out`, diagnostics to `err`. Returns the process exit code:
/// 0 on success, 1 when a verification or comparison fails (or a cache or
/// network operation cannot be completed), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bpa::cli
