#ifndef JUGS_CLI_HPP
#define JUGS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jugs::cli {

// Exit codes are a function of (parse outcome, verdict) and nothing else.
inline constexpr int exit_solvable = 0;     // also: graph emitted, verify clean
inline constexpr int exit_unsolvable = 1;   // also: verify found discrepancies
inline constexpr int exit_input_error = 2;  // parse or validation failure

/// Full command dispatch. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jugs::cli

#endif
