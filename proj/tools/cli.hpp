#ifndef FEWEARS_TOOLS_CLI_HPP
#define FEWEARS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fewears::cli {

/// Exit codes: 0 success, 1 usage or domain error, 2 verification failure.
enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses `a..b` or `a` into an inclusive range.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace fewears::cli

#endif  // FEWEARS_TOOLS_CLI_HPP
