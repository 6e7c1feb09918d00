#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadmaps::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command. args excludes the program name, e.g.
/// {"invariants", "--map", "1,2,0;3,1,1"}. JSON (or CSV) goes to out; errors
/// go to err as {"error": "..."}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadmaps::cli
