#ifndef FDR_CLI_HPP
#define FDR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fdr::cli {

enum ExitCode { kOk = 0, kMathFailure = 1, kUsage = 2 };

/**
 * Runs one command line (without the program name). Output is deterministic
 * given args; errors go to err.
 */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fdr::cli

#endif
