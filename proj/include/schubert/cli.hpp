#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert::cli {

inline constexpr const char* kJsonSchema = "schubert-cli/1";

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, budget_exceeded = 3 };

/// Runs the command line (without the program name).  Results go to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
